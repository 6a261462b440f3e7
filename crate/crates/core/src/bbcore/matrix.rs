//! Matrix groups over explicit fields as black box backends.

use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use rand::SeedableRng;

use super::{global_exponent_gl, BlackBox, GroupOracle, GroupString};
use crate::error::{Error, Result};
use crate::ffield::{ExplicitField, FieldElement};

/// A square matrix, entries row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub dim: usize,
    pub entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn identity(f: &ExplicitField, dim: usize) -> Self {
        Self::scalar(f, dim, &f.one())
    }

    pub fn scalar(f: &ExplicitField, dim: usize, s: &FieldElement) -> Self {
        let mut entries = vec![f.zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = s.clone();
        }
        Self { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Parse("matrix rows must have equal length".into()));
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix from small integers mapped into the prime subfield.
    pub fn from_u64(f: &ExplicitField, rows: &[&[u64]]) -> Self {
        let dim = rows.len();
        let entries = rows.iter().flat_map(|r| r.iter().map(|&v| f.from_u64(v))).collect();
        Self { dim, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul(&self, f: &ExplicitField, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = f.zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                entries.push(acc);
            }
        }
        Matrix { dim: n, entries }
    }

    pub fn scale(&self, f: &ExplicitField, s: &FieldElement) -> Matrix {
        Matrix { dim: self.dim, entries: self.entries.iter().map(|e| f.mul(e, s)).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        let entries = (0..n * n).map(|idx| self.get(idx % n, idx / n).clone()).collect();
        Matrix { dim: n, entries }
    }

    pub fn map(&self, g: impl Fn(&FieldElement) -> FieldElement) -> Matrix {
        Matrix { dim: self.dim, entries: self.entries.iter().map(g).collect() }
    }

    pub fn trace(&self, f: &ExplicitField) -> FieldElement {
        (0..self.dim).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn det(&self, f: &ExplicitField) -> FieldElement {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return f.zero();
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = f.neg(&det);
            }
            let pv = a[col * n + col].clone();
            det = f.mul(&det, &pv);
            let inv = f.inv(&pv).expect("nonzero pivot");
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let c = f.mul(&a[r * n + col], &inv);
                for j in col..n {
                    let t = f.mul(&c, &a[col * n + j]);
                    a[r * n + j] = f.sub(&a[r * n + j], &t);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &ExplicitField) -> Result<Matrix> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Matrix::identity(f, n).entries;
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(Error::SingularGenerator(0))?;
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    inv.swap(piv * n + j, col * n + j);
                }
            }
            let pinv = f.inv(&a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul(&a[col * n + j], &pinv);
                inv[col * n + j] = f.mul(&inv[col * n + j], &pinv);
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let c = a[r * n + col].clone();
                for j in 0..n {
                    let t = f.mul(&c, &a[col * n + j]);
                    a[r * n + j] = f.sub(&a[r * n + j], &t);
                    let t = f.mul(&c, &inv[col * n + j]);
                    inv[r * n + j] = f.sub(&inv[r * n + j], &t);
                }
            }
        }
        Ok(Matrix { dim: n, entries: inv })
    }

    pub fn pow(&self, f: &ExplicitField, e: &BigUint) -> Matrix {
        let mut result = Matrix::identity(f, self.dim);
        for i in (0..e.bits()).rev() {
            result = result.mul(f, &result);
            if e.bit(i) {
                result = result.mul(f, self);
            }
        }
        result
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| if i == j { self.get(i, j) == self.get(0, 0) } else { self.get(i, j).is_zero() }))
    }
}

/// The roots of λ^dim = 1 in F: a cyclic group of order gcd(dim, q−1).
pub fn center_scalars(f: &ExplicitField, dim: usize) -> Vec<FieldElement> {
    let q1 = f.order() - 1u32;
    let g = BigUint::from(dim).gcd(&q1);
    let g_small = u64::try_from(&g).expect("gcd bounded by dim");
    if g_small == 1 {
        return vec![f.one()];
    }
    let cof = &q1 / &g;
    let primes: Vec<u64> = (2..=g_small).filter(|r| g_small % r == 0 && (2..*r).all(|d| r % d != 0)).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xc3a7);
    let zeta = loop {
        let x = f.random_nonzero(&mut rng);
        let z = f.pow_u(&x, &cof);
        if primes.iter().all(|r| f.pow_u(&z, &BigUint::from(g_small / r)) != f.one()) {
            break z;
        }
    };
    let mut out = vec![f.one()];
    for _ in 1..g_small {
        let next = f.mul(out.last().unwrap(), &zeta);
        out.push(next);
    }
    out
}

/// GL_dim(F) strings with exact equality, or equality modulo the scalars
/// λ with λ^dim = 1 when `quotient` is set.
#[derive(Debug)]
pub struct MatrixGroup {
    field: Arc<ExplicitField>,
    dim: usize,
    quotient: bool,
    center: Vec<FieldElement>,
}

impl MatrixGroup {
    pub fn new(field: Arc<ExplicitField>, dim: usize, quotient: bool) -> Result<Self> {
        if dim < 1 {
            return Err(Error::InvalidDimension);
        }
        let center = if quotient { center_scalars(&field, dim) } else { vec![field.one()] };
        Ok(Self { field, dim, quotient, center })
    }

    pub fn field(&self) -> &Arc<ExplicitField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient
    }

    /// Scalars identified by equality (just 1 without quotient).
    pub fn center(&self) -> &[FieldElement] {
        &self.center
    }

    pub fn encode(&self, m: &Matrix) -> GroupString {
        let mut out = Vec::with_capacity(self.string_len());
        for e in &m.entries {
            self.field.encode_into(e, &mut out);
        }
        GroupString(out)
    }

    /// # Panics
    /// On malformed strings; [`MatrixGroup::try_decode`] reports instead.
    pub fn decode(&self, s: &GroupString) -> Matrix {
        self.try_decode(s).expect("malformed matrix string")
    }

    pub fn try_decode(&self, s: &GroupString) -> Result<Matrix> {
        if s.len() != self.string_len() {
            return Err(Error::LengthMismatch { expected: self.string_len(), found: s.len() });
        }
        let w = self.field.element_len();
        let entries = s.0.chunks(w).map(|c| self.field.decode(c)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { dim: self.dim, entries })
    }

    pub fn global_exponent(&self) -> BigUint {
        global_exponent_gl(self.dim, self.field.characteristic(), self.field.degree() as u32)
    }
}

impl GroupOracle for MatrixGroup {
    fn string_len(&self) -> usize {
        self.dim * self.dim * self.field.element_len()
    }

    fn identity(&self) -> GroupString {
        self.encode(&Matrix::identity(&self.field, self.dim))
    }

    fn mul(&self, x: &GroupString, y: &GroupString) -> GroupString {
        self.encode(&self.decode(x).mul(&self.field, &self.decode(y)))
    }

    fn inv(&self, x: &GroupString) -> GroupString {
        self.encode(&self.decode(x).inverse(&self.field).expect("group elements are invertible"))
    }

    fn eq(&self, x: &GroupString, y: &GroupString) -> bool {
        if x == y {
            return true;
        }
        if !self.quotient || self.center.len() == 1 {
            return false;
        }
        let (a, b) = (self.decode(x), self.decode(y));
        // a = λ b forces λ = a_e / b_e at the first nonzero entry of b
        let Some(e) = b.entries.iter().position(|v| !v.is_zero()) else { return false };
        let lambda = self.field.mul(&a.entries[e], &self.field.inv(&b.entries[e]).expect("nonzero"));
        self.center.contains(&lambda) && b.scale(&self.field, &lambda) == a
    }
}

/// A matrix black box over ⟨gens⟩ with exponent of GL_dim(F), sampled by
/// product replacement. Also returns the backend for white-box use.
pub fn bb_matrix(field: Arc<ExplicitField>, dim: usize, gens: &[Matrix], quotient: bool, seed: u64) -> Result<(BlackBox, Arc<MatrixGroup>)> {
    let group = Arc::new(MatrixGroup::new(field.clone(), dim, quotient)?);
    for (i, g) in gens.iter().enumerate() {
        if g.dim != dim || g.entries.len() != dim * dim {
            return Err(Error::InvalidDimension);
        }
        if g.det(&field).is_zero() {
            return Err(Error::SingularGenerator(i));
        }
    }
    let seeds: Vec<GroupString> = gens.iter().map(|g| group.encode(g)).collect();
    let e = group.global_exponent();
    let bb = BlackBox::from_generators(group.clone(), &seeds, Some(e), seed)?;
    Ok((bb, group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn field(p: u32, n: usize) -> Arc<ExplicitField> {
        Arc::new(ExplicitField::standard(BigUint::from(p), n).unwrap())
    }

    // Oracle: enumerate SL_2(F_p) directly.
    fn sl2_elements(f: &ExplicitField) -> HashSet<Matrix> {
        let els: Vec<FieldElement> = f.elements().collect();
        let mut out = HashSet::new();
        for a in &els {
            for b in &els {
                for c in &els {
                    for d in &els {
                        let m = Matrix { dim: 2, entries: vec![a.clone(), b.clone(), c.clone(), d.clone()] };
                        if m.det(f) == f.one() {
                            out.insert(m);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn sl2_f4_string_length() {
        let f4 = field(2, 2);
        let gens = [Matrix::from_u64(&f4, &[&[1, 1], &[0, 1]]), Matrix::from_u64(&f4, &[&[1, 0], &[1, 1]])];
        let (bb, _) = bb_matrix(f4.clone(), 2, &gens, false, 1).unwrap();
        // four field elements of two one-byte coefficients
        assert_eq!(bb.string_len(), 4 * 2);
        assert_eq!(bb.exponent(), Some(&BigUint::from(30u32)));
    }

    #[test]
    fn singular_generator_and_dimension_errors() {
        let f5 = field(5, 1);
        let sing = Matrix::from_u64(&f5, &[&[1, 2], &[2, 4]]);
        assert!(matches!(bb_matrix(f5.clone(), 2, &[sing], false, 1), Err(Error::SingularGenerator(0))));
        assert!(matches!(MatrixGroup::new(f5, 0, false), Err(Error::InvalidDimension)));
    }

    #[test]
    fn psl_equality_identifies_negatives() {
        let f9 = field(3, 2);
        let g = MatrixGroup::new(f9.clone(), 2, true).unwrap();
        assert_eq!(g.center().len(), 2);
        let m = Matrix::from_u64(&f9, &[&[1, 1], &[0, 1]]);
        let minus = m.scale(&f9, &f9.neg(&f9.one()));
        assert!(g.eq(&g.encode(&m), &g.encode(&minus)));
        let exact = MatrixGroup::new(f9.clone(), 2, false).unwrap();
        assert!(!exact.eq(&exact.encode(&m), &exact.encode(&minus)));
    }

    #[test]
    fn distinct_diagonals_differ() {
        let f7 = field(7, 1);
        let g = MatrixGroup::new(f7.clone(), 2, false).unwrap();
        let a = Matrix::from_u64(&f7, &[&[3, 0], &[0, 5]]);
        let b = Matrix::from_u64(&f7, &[&[5, 0], &[0, 3]]);
        assert!(!g.eq(&g.encode(&a), &g.encode(&b)));
    }

    #[test]
    fn transvections_generate_sl2_f5() {
        let f5 = field(5, 1);
        let gens = [Matrix::from_u64(&f5, &[&[1, 1], &[0, 1]]), Matrix::from_u64(&f5, &[&[1, 0], &[1, 1]])];
        let (mut bb, g) = bb_matrix(f5.clone(), 2, &gens, false, 9).unwrap();
        let all = sl2_elements(&f5);
        assert_eq!(all.len(), 120);
        let seen: HashSet<Matrix> = (0..3000).map(|_| g.decode(&bb.rand())).collect();
        assert_eq!(seen, all);
    }

    #[test]
    fn inverse_det_and_center_sizes() {
        let f25 = field(5, 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let m = Matrix { dim: 3, entries: (0..9).map(|_| f25.random(&mut rng)).collect() };
            if m.det(&f25).is_zero() {
                continue;
            }
            let inv = m.inverse(&f25).unwrap();
            assert_eq!(m.mul(&f25, &inv), Matrix::identity(&f25, 3));
            assert_eq!(f25.mul(&m.det(&f25), &inv.det(&f25)), f25.one());
        }
        // gcd(3, 24) = 3, gcd(2, 4) = 2, gcd(3, 4) = 1
        assert_eq!(center_scalars(&f25, 3).len(), 3);
        assert_eq!(center_scalars(&field(5, 1), 2).len(), 2);
        assert_eq!(center_scalars(&field(5, 1), 3).len(), 1);
    }

    #[test]
    fn quotient_classes_have_center_size() {
        let f7 = field(7, 1);
        let g = MatrixGroup::new(f7.clone(), 3, true).unwrap();
        // gcd(3, 6) = 3 scalars: 1, 2, 4
        assert_eq!(g.center().len(), 3);
        let m = Matrix::from_u64(&f7, &[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        let class: Vec<Matrix> = f7.elements().skip(1).map(|l| m.scale(&f7, &l)).filter(|x| g.eq(&g.encode(x), &g.encode(&m))).collect();
        assert_eq!(class.len(), 3);
    }
}
