//! Explicit finite fields F_{p^n} with arbitrary-precision p.
//!
//! A field is presented either by a monic irreducible polynomial (basis
//! 1, t, ..., t^{n-1}) or by structure constants c_ijk with
//! s_i s_j = Σ_k c_ijk s_k. Both presentations share one element type: n
//! coefficients, lowest basis index first.

pub mod io;
pub mod linalg;
pub mod poly;

use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    pub coeffs: Vec<BigUint>,
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for FieldElement {
    /// Colon-separated coefficients, the entry syntax of generator files.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// How a field multiplies basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definition {
    /// Monic polynomial c_0 + c_1 t + ... + t^n, ascending.
    Polynomial(Poly),
    /// n³ entries indexed (i, j, k) row-major.
    Table(Vec<BigUint>),
}

#[derive(Clone, Debug)]
pub struct ExplicitField {
    p: BigUint,
    degree: usize,
    defn: Definition,
    /// p minus each non-leading modulus coefficient, for additive reduction.
    neg_modulus: Vec<BigUint>,
    one: FieldElement,
    order: BigUint,
    byte_width: usize,
}

impl PartialEq for ExplicitField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.degree == other.degree && self.defn == other.defn
    }
}
impl Eq for ExplicitField {}

impl ExplicitField {
    /// Validating constructor for either presentation. `p` is trusted to be prime.
    pub fn new(p: BigUint, n: usize, defn: Definition) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDegree);
        }
        match defn {
            Definition::Polynomial(f) => Self::from_polynomial(p, n, f),
            Definition::Table(t) => Self::from_table(p, n, t),
        }
    }

    pub fn prime(p: BigUint) -> Self {
        Self::from_polynomial(p, 1, vec![BigUint::zero(), BigUint::one()]).expect("t is irreducible")
    }

    /// F_{p^n} with the first irreducible found by [`poly::find_irreducible`].
    pub fn standard(p: BigUint, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDegree);
        }
        let f = poly::find_irreducible(&p, n);
        Self::from_polynomial(p, n, f)
    }

    fn from_polynomial(p: BigUint, n: usize, f: Poly) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDegree);
        }
        if f.len() != n + 1 || !f[n].is_one() || f.iter().any(|c| c >= &p) {
            return Err(Error::MalformedPolynomial { expected: n });
        }
        if !poly::is_irreducible(&f, &p) {
            return Err(Error::Reducible(p));
        }
        let neg_modulus = f[..n].iter().map(|c| (&p - c) % &p).collect();
        let mut one = vec![BigUint::zero(); n];
        one[0] = BigUint::one();
        Ok(Self::assemble(p, n, Definition::Polynomial(f), neg_modulus, FieldElement { coeffs: one }))
    }

    fn from_table(p: BigUint, n: usize, table: Vec<BigUint>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDegree);
        }
        if table.len() != n * n * n {
            return Err(Error::NotAField(format!("expected {} constants, found {}", n * n * n, table.len())));
        }
        let table: Vec<BigUint> = table.into_iter().map(|c| c % &p).collect();
        let placeholder = FieldElement { coeffs: vec![BigUint::zero(); n] };
        let mut field = Self::assemble(p, n, Definition::Table(table), Vec::new(), placeholder);
        field.one = field.validate_table()?;
        Ok(field)
    }

    fn assemble(p: BigUint, n: usize, defn: Definition, neg_modulus: Vec<BigUint>, one: FieldElement) -> Self {
        let order = p.pow(n as u32);
        let byte_width = (p.bits() as usize).div_ceil(8).max(1);
        Self { p, degree: n, defn, neg_modulus, one, order, byte_width }
    }

    /// Exact basis-level checks of commutativity and associativity, a solved
    /// unit, and a certificate element whose minimal polynomial is irreducible
    /// of degree n. Returns the unit.
    fn validate_table(&self) -> Result<FieldElement> {
        let n = self.degree;
        let Definition::Table(c) = &self.defn else { unreachable!() };
        let basis = |i: usize| {
            let mut v = vec![BigUint::zero(); n];
            v[i] = BigUint::one();
            FieldElement { coeffs: v }
        };
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if c[(i * n + j) * n + k] != c[(j * n + i) * n + k] {
                        return Err(Error::NotAField(format!("s{}s{} != s{}s{}", i + 1, j + 1, j + 1, i + 1)));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let sij = self.mul(&basis(i), &basis(j));
                for l in 0..n {
                    let left = self.mul(&sij, &basis(l));
                    let right = self.mul(&basis(i), &self.mul(&basis(j), &basis(l)));
                    if left != right {
                        return Err(Error::NotAField("multiplication is not associative".into()));
                    }
                }
            }
        }
        // unit e: Σ_i e_i c_ijk = δ_jk, an n² × n linear system over F_p
        let fp = Self::prime(self.p.clone());
        let scalar = |v: &BigUint| FieldElement { coeffs: vec![v.clone()] };
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                let mut row: Vec<FieldElement> = (0..n).map(|i| scalar(&c[(i * n + j) * n + k])).collect();
                let rhs = if j == k { BigUint::one() } else { BigUint::zero() };
                row.push(fp.neg(&scalar(&rhs)));
                rows.push(row);
            }
        }
        let kernel = linalg::null_space(&fp, &rows, n + 1);
        let sol = kernel.iter().find(|v| !v[n].is_zero()).ok_or_else(|| Error::NotAField("no multiplicative unit".into()))?;
        let scale = fp.inv(&sol[n])?;
        let one = FieldElement { coeffs: (0..n).map(|i| fp.mul(&sol[i], &scale).coeffs[0].clone()).collect() };
        let mut field = self.clone();
        field.one = one.clone();
        if !field.has_generating_element() {
            return Err(Error::NotAField("no element with irreducible minimal polynomial of degree n".into()));
        }
        Ok(one)
    }

    /// Searches for an element whose powers 1, a, ..., a^{n-1} are independent
    /// and whose minimal polynomial is irreducible; such an element makes the
    /// algebra F_p[a] ≅ F_{p^n}.
    fn has_generating_element(&self) -> bool {
        if self.degree == 1 {
            return true;
        }
        let exhaustive = self.order <= BigUint::from(1u32 << 16);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let candidates: Box<dyn Iterator<Item = FieldElement>> = if exhaustive {
            let total = self.order.iter_u64_digits().next().unwrap_or(0);
            Box::new((1..total).map(|i| self.element_from_index(i)))
        } else {
            Box::new((0..40).map(move |_| self.random(&mut rng)))
        };
        candidates.into_iter().any(|a| self.minimal_polynomial(&a).is_some_and(|f| f.len() == self.degree + 1 && poly::is_irreducible(&f, &self.p)))
    }

    /// Monic minimal polynomial of `a` over F_p.
    pub fn minimal_polynomial(&self, a: &FieldElement) -> Option<Poly> {
        let n = self.degree;
        let fp = Self::prime(self.p.clone());
        let mut powers = vec![self.one.clone()];
        for _ in 0..n {
            let next = self.mul(powers.last().unwrap(), a);
            powers.push(next);
        }
        for d in 1..=n {
            // columns are powers 0..=d; find a kernel vector with nonzero top coefficient
            let rows: Vec<Vec<FieldElement>> = (0..n).map(|r| (0..=d).map(|j| FieldElement { coeffs: vec![powers[j].coeffs[r].clone()] }).collect()).collect();
            let kernel = linalg::null_space(&fp, &rows, d + 1);
            if let Some(v) = kernel.iter().find(|v| !v[d].is_zero()) {
                let lead = fp.inv(&v[d]).ok()?;
                return Some(v.iter().map(|c| fp.mul(c, &lead).coeffs[0].clone()).collect());
            }
        }
        None
    }

    pub fn characteristic(&self) -> &BigUint {
        &self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Field size p^n.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn definition(&self) -> &Definition {
        &self.defn
    }

    /// Bytes per coefficient in the string encoding.
    pub fn byte_width(&self) -> usize {
        self.byte_width
    }

    /// Bytes per encoded element.
    pub fn element_len(&self) -> usize {
        self.byte_width * self.degree
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![BigUint::zero(); self.degree] }
    }

    pub fn one(&self) -> FieldElement {
        self.one.clone()
    }

    /// Validates and wraps a coefficient vector.
    pub fn element(&self, coeffs: Vec<BigUint>) -> Result<FieldElement> {
        if coeffs.len() != self.degree || coeffs.iter().any(|c| c >= &self.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElement { coeffs })
    }

    /// The image of an integer under Z → F.
    pub fn scalar(&self, m: &BigInt) -> FieldElement {
        let p = BigInt::from(self.p.clone());
        let r = ((m % &p) + &p) % &p;
        let r = r.to_biguint().expect("reduced residue is non-negative");
        FieldElement { coeffs: self.one.coeffs.iter().map(|c| (c * &r) % &self.p).collect() }
    }

    pub fn from_u64(&self, m: u64) -> FieldElement {
        self.scalar(&BigInt::from(m))
    }

    /// The generator t of a polynomial presentation (the first basis element otherwise).
    pub fn generator(&self) -> FieldElement {
        let mut c = vec![BigUint::zero(); self.degree];
        c[self.degree.min(2) - 1] = BigUint::one();
        FieldElement { coeffs: c }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        debug_assert_eq!(a.coeffs.len(), self.degree);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| {
                let s = x + y;
                if s >= self.p {
                    s - &self.p
                } else {
                    s
                }
            })
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|x| if x.is_zero() { x.clone() } else { &self.p - x }).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.degree;
        debug_assert_eq!(a.coeffs.len(), n);
        debug_assert_eq!(b.coeffs.len(), n);
        let p = &self.p;
        match &self.defn {
            Definition::Polynomial(_) => {
                if n == 1 {
                    return FieldElement { coeffs: vec![(&a.coeffs[0] * &b.coeffs[0]) % p] };
                }
                let mut t = vec![BigUint::zero(); 2 * n - 1];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        t[i + j] += x * y;
                    }
                }
                for i in (n..2 * n - 1).rev() {
                    let c = &t[i] % p;
                    if c.is_zero() {
                        continue;
                    }
                    for (j, f) in self.neg_modulus.iter().enumerate() {
                        t[i - n + j] += &c * f;
                    }
                }
                t.truncate(n);
                FieldElement { coeffs: t.into_iter().map(|c| c % p).collect() }
            }
            Definition::Table(c) => {
                let mut out = vec![BigUint::zero(); n];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let xy = x * y;
                        for (k, o) in out.iter_mut().enumerate() {
                            let cijk = &c[(i * n + j) * n + k];
                            if !cijk.is_zero() {
                                *o += &xy * cijk;
                            }
                        }
                    }
                }
                FieldElement { coeffs: out.into_iter().map(|c| c % p).collect() }
            }
        }
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow_u(&self, a: &FieldElement, e: &BigUint) -> FieldElement {
        let mut result = self.one();
        for i in (0..e.bits()).rev() {
            result = self.square(&result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    /// a^e; negative exponents invert first.
    pub fn pow(&self, a: &FieldElement, e: &BigInt) -> Result<FieldElement> {
        match e.sign() {
            Sign::Minus => {
                let inv = self.inv(a)?;
                Ok(self.pow_u(&inv, e.magnitude()))
            }
            _ => Ok(self.pow_u(a, e.magnitude())),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_u(a, &(&self.order - 2u32)))
    }

    /// a^{p^j}.
    pub fn frobenius(&self, a: &FieldElement, j: usize) -> FieldElement {
        let j = j % self.degree;
        if j == 0 {
            return a.clone();
        }
        self.pow_u(a, &self.p.pow(j as u32))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        let coeffs = (0..self.degree).map(|_| rng.gen_biguint_below(&self.p)).collect();
        FieldElement { coeffs }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        loop {
            let a = self.random(rng);
            if !a.is_zero() {
                return a;
            }
        }
    }

    /// Appends the big-endian fixed-width encoding of `a`.
    pub fn encode_into(&self, a: &FieldElement, out: &mut Vec<u8>) {
        for c in &a.coeffs {
            let bytes = c.to_bytes_be();
            let bytes: &[u8] = if c.is_zero() { &[] } else { &bytes };
            out.extend(std::iter::repeat_n(0u8, self.byte_width - bytes.len()));
            out.extend_from_slice(bytes);
        }
    }

    pub fn encode(&self, a: &FieldElement) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.element_len());
        self.encode_into(a, &mut out);
        out
    }

    pub fn decode(&self, bytes: &[u8]) -> Result<FieldElement> {
        if bytes.len() != self.element_len() {
            return Err(Error::LengthMismatch { expected: self.element_len(), found: bytes.len() });
        }
        let coeffs: Vec<BigUint> = bytes.chunks(self.byte_width).map(BigUint::from_bytes_be).collect();
        if coeffs.iter().any(|c| c >= &self.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElement { coeffs })
    }

    /// Structure constants of the basis, (i, j, k) row-major.
    pub fn structure_constants(&self) -> Vec<BigUint> {
        if let Definition::Table(c) = &self.defn {
            return c.clone();
        }
        let n = self.degree;
        let basis = |i: usize| {
            let mut v = vec![BigUint::zero(); n];
            v[i] = BigUint::one();
            FieldElement { coeffs: v }
        };
        let mut out = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                out.extend(self.mul(&basis(i), &basis(j)).coeffs);
            }
        }
        out
    }

    /// Field size as u64 when it fits.
    pub fn small_order(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    /// Element with base-p digits of `index` as coefficients.
    pub fn element_from_index(&self, mut index: u64) -> FieldElement {
        let p = u64::try_from(&self.p).expect("small field");
        let coeffs = (0..self.degree)
            .map(|_| {
                let d = index % p;
                index /= p;
                BigUint::from(d)
            })
            .collect();
        FieldElement { coeffs }
    }

    pub fn element_index(&self, a: &FieldElement) -> u64 {
        let p = u64::try_from(&self.p).expect("small field");
        a.coeffs.iter().rev().fold(0u64, |acc, c| acc * p + u64::try_from(c).expect("reduced coefficient"))
    }

    /// All elements in index order; only sensible for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let total = self.small_order().expect("small field");
        (0..total).map(move |i| self.element_from_index(i))
    }

    /// Whether `a` is a multiple of the unit, returning the multiple.
    pub fn prime_subfield_value(&self, a: &FieldElement) -> Option<BigUint> {
        let (i, unit) = self.one.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())?;
        let m = (&a.coeffs[i] * unit.modpow(&(&self.p - 2u32), &self.p)) % &self.p;
        (self.scalar(&BigInt::from(m.clone())) == *a).then_some(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn poly_field(p: u64, f: &[u64]) -> ExplicitField {
        let n = f.len() - 1;
        ExplicitField::new(big(p), n, Definition::Polynomial(f.iter().map(|&c| big(c)).collect())).unwrap()
    }

    fn el(f: &ExplicitField, c: &[u64]) -> FieldElement {
        f.element(c.iter().map(|&x| big(x)).collect()).unwrap()
    }

    // Oracle: multiply residues of polynomials by hand, reducing with the modulus.
    fn naive_poly_mul(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let n = f.len() - 1;
        let mut t = vec![0u64; 2 * n];
        for i in 0..n {
            for j in 0..n {
                t[i + j] = (t[i + j] + a[i] * b[j]) % p;
            }
        }
        for i in (n..2 * n).rev() {
            let c = t[i];
            t[i] = 0;
            for j in 0..n {
                t[i - n + j] = (t[i - n + j] + c * (p - f[j])) % p;
            }
        }
        t.truncate(n);
        t
    }

    #[test]
    fn f4_from_polynomial() {
        let f4 = poly_field(2, &[1, 1, 1]);
        let s = el(&f4, &[0, 1]);
        assert_eq!(f4.mul(&s, &s), el(&f4, &[1, 1]));
        // every nonzero element has an inverse in the 4-element table
        for a in f4.elements().skip(1) {
            assert_eq!(f4.mul(&a, &f4.inv(&a).unwrap()), f4.one());
        }
    }

    #[test]
    fn trivial_table_gives_prime_field() {
        let f7 = ExplicitField::new(big(7), 1, Definition::Table(vec![big(1)])).unwrap();
        assert_eq!(f7.mul(&el(&f7, &[3]), &el(&f7, &[5])), f7.one());
        assert_eq!(f7.inv(&el(&f7, &[3])).unwrap(), el(&f7, &[5]));
    }

    #[test]
    fn reducible_polynomial_rejected() {
        let err = ExplicitField::new(big(5), 2, Definition::Polynomial(vec![big(1), big(0), big(1)]));
        assert!(matches!(err, Err(Error::Reducible(_))));
        assert!(err.unwrap_err().to_string().contains("reducible"));
    }

    #[test]
    fn degree_zero_rejected() {
        assert!(matches!(ExplicitField::new(big(5), 0, Definition::Table(vec![])), Err(Error::InvalidDegree)));
    }

    #[test]
    fn f9_values() {
        let f9 = poly_field(3, &[1, 0, 1]);
        let t = el(&f9, &[0, 1]);
        assert_eq!(f9.mul(&t, &t), el(&f9, &[2, 0]));
        assert_eq!(f9.pow(&t, &BigInt::from(3)).unwrap(), el(&f9, &[0, 2]));
        assert_eq!(f9.frobenius(&t, 1), el(&f9, &[0, 2]));
        assert_eq!(f9.frobenius(&t, 2), t);
        assert_eq!(f9.pow(&t, &BigInt::from(0)).unwrap(), f9.one());
        assert_eq!(f9.mul(&t, &f9.one()), t);
    }

    #[test]
    fn zero_inverse_and_negative_power() {
        let f7 = ExplicitField::prime(big(7));
        assert!(matches!(f7.inv(&f7.zero()), Err(Error::ZeroInverse)));
        assert!(f7.pow(&f7.zero(), &BigInt::from(-1)).is_err());
        assert_eq!(f7.pow(&el(&f7, &[3]), &BigInt::from(-1)).unwrap(), el(&f7, &[5]));
        assert_eq!(f7.inv(&f7.one()).unwrap(), f7.one());
    }

    #[test]
    fn mul_matches_naive_table() {
        for (p, f) in [(2u64, vec![1u64, 1, 0, 1]), (3, vec![2, 2, 0, 1]), (5, vec![2, 0, 1]), (7, vec![1, 0, 1])] {
            let field = poly_field(p, &f);
            let elems: Vec<FieldElement> = field.elements().collect();
            let raw = |a: &FieldElement| a.coeffs.iter().map(|c| u64::try_from(c).unwrap()).collect::<Vec<_>>();
            for a in &elems {
                for b in &elems {
                    let expected = naive_poly_mul(&raw(a), &raw(b), &f, p);
                    assert_eq!(raw(&field.mul(a, b)), expected);
                }
            }
        }
    }

    #[test]
    fn inverse_is_involutive_and_lagrange() {
        let f27 = ExplicitField::standard(big(3), 3).unwrap();
        let e = f27.order() - 1u32;
        for a in f27.elements().skip(1) {
            assert_eq!(f27.inv(&f27.inv(&a).unwrap()).unwrap(), a);
            assert_eq!(f27.pow_u(&a, &e), f27.one());
        }
    }

    #[test]
    fn table_roundtrip_and_validation() {
        let f9 = poly_field(3, &[1, 0, 1]);
        let table = f9.structure_constants();
        let t9 = ExplicitField::new(big(3), 2, Definition::Table(table.clone())).unwrap();
        assert_eq!(t9.one(), f9.one());
        for a in f9.elements() {
            for b in f9.elements() {
                assert_eq!(t9.mul(&a, &b), f9.mul(&a, &b));
            }
        }
        // F_3 × F_3 (componentwise) is commutative, associative and unital but not a field
        let mut split = vec![big(0); 8];
        split[0] = big(1); // s1 s1 = s1
        split[7] = big(1); // s2 s2 = s2
        assert!(matches!(ExplicitField::new(big(3), 2, Definition::Table(split)), Err(Error::NotAField(_))));
        // non-commutative table
        let mut bad = table;
        bad[2] = big(2); // first coefficient of s1·s2
        assert!(ExplicitField::new(big(3), 2, Definition::Table(bad)).is_err());
    }

    #[test]
    fn table_with_non_standard_unit() {
        // F_5 ⊗ basis s1 = 2: s1 s1 = 2 s1, so the unit is 3 s1
        let f = ExplicitField::new(big(5), 1, Definition::Table(vec![big(2)])).unwrap();
        assert_eq!(f.one(), el(&f, &[3]));
        assert_eq!(f.prime_subfield_value(&el(&f, &[1])), Some(big(2)));
    }

    #[test]
    fn encoding_roundtrip_is_fixed_width() {
        let p: BigUint = "622288097498926496141095869268883999563096063592498055290461".parse().unwrap();
        let f = ExplicitField::prime(p);
        assert_eq!(f.byte_width(), 25);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let a = f.random(&mut rng);
            let bytes = f.encode(&a);
            assert_eq!(bytes.len(), 25);
            assert_eq!(f.decode(&bytes).unwrap(), a);
        }
        assert!(f.decode(&[0u8; 3]).is_err());
    }

    proptest! {
        #[test]
        fn frobenius_is_a_ring_map(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for field in [poly_field(3, &[1, 0, 1]), ExplicitField::standard(big(5), 3).unwrap(), ExplicitField::standard(big(2), 8).unwrap()] {
                let a = field.random(&mut rng);
                let b = field.random(&mut rng);
                prop_assert_eq!(field.frobenius(&field.add(&a, &b), 1), field.add(&field.frobenius(&a, 1), &field.frobenius(&b, 1)));
                prop_assert_eq!(field.frobenius(&field.mul(&a, &b), 1), field.mul(&field.frobenius(&a, 1), &field.frobenius(&b, 1)));
                prop_assert_eq!(field.frobenius(&a, field.degree()), a);
            }
        }

        #[test]
        fn distributive_and_associative(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let field = ExplicitField::standard(big(1_000_003), 3).unwrap();
            let (a, b, c) = (field.random(&mut rng), field.random(&mut rng), field.random(&mut rng));
            prop_assert_eq!(field.mul(&a, &field.add(&b, &c)), field.add(&field.mul(&a, &b), &field.mul(&a, &c)));
            prop_assert_eq!(field.mul(&field.mul(&a, &b), &c), field.mul(&a, &field.mul(&b, &c)));
        }
    }
}
