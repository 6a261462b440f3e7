//! Standard generators and Curtis–Tits data for SL_n(q) matrix backends.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bbcore::matrix::{bb_matrix, Matrix, MatrixGroup};
use crate::bbcore::BlackBox;
use crate::cyclic::{order_exact, FactoredInteger};
use crate::error::{Error, Result};
use crate::ffield::{ExplicitField, FieldElement};
use crate::twisted::{CurtisTitsDatum, DatumNode};

const SEARCH_LIMIT: usize = 10_000;

fn elem_order(f: &ExplicitField, a: &FieldElement, order: &FactoredInteger) -> Option<BigUint> {
    if f.pow_u(a, order.value()) != f.one() {
        return None;
    }
    let mut d = order.value().clone();
    for (p, _) in order.factors() {
        while (&d % p) == BigUint::ZERO && f.pow_u(a, &(&d / p)) == f.one() {
            d /= p;
        }
    }
    Some(d)
}

/// A generator of F_q^*, given q−1 factored.
pub fn primitive_element(f: &ExplicitField, q_minus_one: &FactoredInteger, seed: u64) -> Result<FieldElement> {
    if q_minus_one.value() != &(f.order() - 1u32) {
        return Err(Error::InvalidOrder);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..SEARCH_LIMIT {
        let a = match f.small_order() {
            Some(n) if (i as u64) + 1 < n => f.element_from_index(i as u64 + 1),
            _ => f.random_nonzero(&mut rng),
        };
        if elem_order(f, &a, q_minus_one).as_ref() == Some(q_minus_one.value()) {
            return Ok(a);
        }
    }
    Err(Error::BudgetExhausted("primitive element search"))
}

/// I + a·E_{ij}.
pub fn transvection(f: &ExplicitField, n: usize, i: usize, j: usize, a: &FieldElement) -> Matrix {
    let mut m = Matrix::identity(f, n);
    m.set(i, j, a.clone());
    m
}

/// diag(..., w, w⁻¹, ...) at positions i, i+1.
pub fn torus_element(f: &ExplicitField, n: usize, i: usize, w: &FieldElement) -> Result<Matrix> {
    let mut m = Matrix::identity(f, n);
    m.set(i, i, w.clone());
    m.set(i + 1, i + 1, f.inv(w)?);
    Ok(m)
}

/// A 2×2 block placed at rows and columns i, i+1 of the identity.
pub fn embed_block(f: &ExplicitField, n: usize, i: usize, b: &Matrix) -> Matrix {
    let mut m = Matrix::identity(f, n);
    for r in 0..2 {
        for c in 0..2 {
            m.set(i + r, i + c, b.get(r, c).clone());
        }
    }
    m
}

/// Transvections between adjacent basis vectors and one torus element of
/// primitive weight; they generate SL_n(q).
pub fn sl_generators(f: &ExplicitField, n: usize, omega: &FieldElement) -> Result<Vec<Matrix>> {
    let one = f.one();
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        gens.push(transvection(f, n, i, i + 1, &one));
        gens.push(transvection(f, n, i + 1, i, &one));
    }
    if n >= 2 {
        gens.push(torus_element(f, n, 0, omega)?);
    }
    Ok(gens)
}

/// [[a, b], [−b, a]] of exact order `order`, from the rational
/// parametrization of a² + b² = 1.
pub fn rotation_of_order(f: &ExplicitField, order: &FactoredInteger, seed: u64) -> Result<Matrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = f.one();
    for _ in 0..SEARCH_LIMIT {
        let s = f.random(&mut rng);
        let d = f.add(&one, &f.square(&s));
        let Ok(dinv) = f.inv(&d) else { continue };
        let a = f.mul(&f.sub(&one, &f.square(&s)), &dinv);
        let b = f.mul(&f.add(&s, &s), &dinv);
        let r = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![f.neg(&b), a]])?;
        // eigenvalue a + bi has the same order as the rotation
        let mut p = r.pow(f, order.value());
        if p != Matrix::identity(f, 2) {
            continue;
        }
        let mut exact = true;
        for (prime, _) in order.factors() {
            p = r.pow(f, &(order.value() / prime));
            if p == Matrix::identity(f, 2) {
                exact = false;
                break;
            }
        }
        if exact {
            return Ok(r);
        }
    }
    Err(Error::BudgetExhausted("torus generator search"))
}

/// SL_n(q) (or PSL_n(q)) on standard generators, with the factorizations
/// needed by the pipelines.
#[derive(Clone, Debug)]
pub struct StandardSl {
    pub field: Arc<ExplicitField>,
    pub n: usize,
    pub group: Arc<MatrixGroup>,
    pub bb: BlackBox,
    pub omega: FieldElement,
    pub q_minus_one: FactoredInteger,
    /// None when q + 1 could not be factored.
    pub q_plus_one: Option<FactoredInteger>,
    /// The global exponent, factored when the factorization was within reach.
    pub exponent: Option<FactoredInteger>,
}

impl StandardSl {
    /// `hints` are primes dividing q ± 1 that trial division would not find.
    pub fn new(field: Arc<ExplicitField>, n: usize, quotient: bool, hints: &[BigUint], seed: u64) -> Result<Self> {
        let q = field.order().clone();
        let q_minus_one = FactoredInteger::with_hints(&q - 1u32, hints)?;
        let q_plus_one = FactoredInteger::with_hints(&q + 1u32, hints).ok();
        let omega = primitive_element(&field, &q_minus_one, seed)?;
        let gens = sl_generators(&field, n, &omega)?;
        let (bb, group) = bb_matrix(field.clone(), n, &gens, quotient, seed)?;
        let e = bb.exponent().cloned().unwrap_or_else(BigUint::one);
        let exponent = if e.bits() <= 256 { FactoredInteger::with_hints(e, hints).ok() } else { None };
        Ok(Self { field, n, group, bb, omega, q_minus_one, q_plus_one, exponent })
    }

    pub fn q(&self) -> &BigUint {
        self.field.order()
    }

    pub fn require_exponent(&self) -> Result<&FactoredInteger> {
        self.exponent.as_ref().ok_or(Error::MissingExponent)
    }

    /// Order of the twisted torus SO₂(q): q − 1 when −1 is a square, else q + 1.
    pub fn twisted_order(&self) -> Result<&FactoredInteger> {
        if (self.q() % 4u32) == BigUint::one() {
            Ok(&self.q_minus_one)
        } else {
            self.q_plus_one.as_ref().ok_or_else(|| Error::IncompleteFactorization(self.q() + 1u32))
        }
    }

    /// Root SL₂ subgroups on adjacent basis pairs, diagonal split tori,
    /// rotation twisted tori and the signed permutation Weyl elements.
    pub fn datum(&self, seed: u64) -> Result<CurtisTitsDatum> {
        let f = &self.field;
        let one = f.one();
        let w_block = Matrix::from_rows(vec![vec![f.zero(), one.clone()], vec![f.neg(&one), f.zero()]])?;
        let twisted_order = self.twisted_order()?.clone();
        let rot = rotation_of_order(f, &twisted_order, seed)?;
        let mut nodes = Vec::new();
        for i in 0..self.n - 1 {
            let t_split = torus_element(f, self.n, i, &self.omega)?;
            let k_gens = [transvection(f, self.n, i, i + 1, &one), transvection(f, self.n, i + 1, i, &one), t_split.clone()];
            nodes.push(DatumNode {
                k_gens: k_gens.iter().map(|m| self.group.encode(m)).collect(),
                t_split: self.group.encode(&t_split),
                split_order: self.q_minus_one.clone(),
                t_twisted: self.group.encode(&embed_block(f, self.n, i, &rot)),
                twisted_order: twisted_order.clone(),
                w: self.group.encode(&embed_block(f, self.n, i, &w_block)),
            });
        }
        Ok(CurtisTitsDatum { nodes, q: self.q().clone() })
    }
}

/// Checks that a torus string has the declared exact order.
pub fn has_order(bb: &BlackBox, x: &crate::bbcore::GroupString, o: &FactoredInteger) -> bool {
    matches!(order_exact(bb, x, o), Ok(d) if &d == o.value())
}
