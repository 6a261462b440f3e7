//! Morphisms as graph subgroups of direct products, and automorphisms
//! carried by k-tuples with cyclic shift.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};

use crate::bbcore::{BlackBox, GroupString};
use crate::cyclic::split_two_part;
use crate::error::{Error, Result};

/// A pointwise map on strings.
pub type Evaluator = Arc<dyn Fn(&GroupString) -> Result<GroupString> + Send + Sync>;

/// The graph {(x, φ(x))} ≤ X × Y as a black box, with an optional pointwise
/// evaluator when φ is structurally known.
#[derive(Clone)]
pub struct Morphism {
    pub source: BlackBox,
    pub target: BlackBox,
    pub graph: BlackBox,
    pub evaluator: Option<Evaluator>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morphism").field("source", &self.source).field("target", &self.target).field("has_evaluator", &self.evaluator.is_some()).finish()
    }
}

impl Morphism {
    /// One graph sample split into (x, image).
    pub fn sample(&mut self) -> (GroupString, GroupString) {
        let s = self.graph.rand();
        self.split(&s)
    }

    pub fn split(&self, s: &GroupString) -> (GroupString, GroupString) {
        let l = self.source.string_len();
        (GroupString(s.0[..l].to_vec()), GroupString(s.0[l..].to_vec()))
    }

    pub fn evaluate(&self, x: &GroupString) -> Option<Result<GroupString>> {
        self.evaluator.as_ref().map(|f| f(x))
    }
}

/// The box ⟨(x_j, y_j)⟩ inside X × Y.
pub fn morphism_from_pairs(x: &BlackBox, y: &BlackBox, pairs: &[(GroupString, GroupString)]) -> Result<Morphism> {
    if pairs.is_empty() {
        return Err(Error::EmptySeeds);
    }
    for (a, b) in pairs {
        x.check(a)?;
        y.check(b)?;
    }
    let product = x.direct_product(y);
    let seeds: Vec<GroupString> = pairs.iter().map(|(a, b)| GroupString::concat(&[a, b])).collect();
    let graph = product.generated_default(&seeds)?;
    Ok(Morphism { source: x.clone(), target: y.clone(), graph, evaluator: None })
}

/// A group carried by k-tuples in X^k on which an order-k automorphism acts
/// as rotation of the components.
#[derive(Clone, Debug)]
pub struct EnrichedBox {
    base: BlackBox,
    k: usize,
    bundled: BlackBox,
}

impl EnrichedBox {
    pub fn base(&self) -> &BlackBox {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bundled(&self) -> &BlackBox {
        &self.bundled
    }

    pub fn bundled_mut(&mut self) -> &mut BlackBox {
        &mut self.bundled
    }

    pub fn rand(&mut self) -> GroupString {
        self.bundled.rand()
    }

    fn piece_len(&self) -> usize {
        self.base.string_len()
    }

    /// (y_0, ..., y_{k-1}) ↦ (y_1, ..., y_{k-1}, y_0).
    pub fn shift(&self, y: &GroupString) -> Result<GroupString> {
        self.bundled.check(y)?;
        let mut v = y.0.clone();
        v.rotate_left(self.piece_len());
        Ok(GroupString(v))
    }

    pub fn shift_by(&self, y: &GroupString, j: usize) -> Result<GroupString> {
        self.bundled.check(y)?;
        let mut v = y.0.clone();
        v.rotate_left((j % self.k) * self.piece_len());
        Ok(GroupString(v))
    }

    pub fn project_first(&self, y: &GroupString) -> Result<GroupString> {
        self.component(y, 0)
    }

    pub fn component(&self, y: &GroupString, i: usize) -> Result<GroupString> {
        self.bundled.check(y)?;
        let l = self.piece_len();
        Ok(GroupString(y.0[i * l..(i + 1) * l].to_vec()))
    }

    pub fn components(&self, y: &GroupString) -> Result<Vec<GroupString>> {
        (0..self.k).map(|i| self.component(y, i)).collect()
    }

    /// A bundled string fixed by an involutive shift (k = 2).
    ///
    /// For a sample y, τ = y·shift(y)⁻¹ is inverted by the shift; when τ has
    /// odd order dividing M (the odd part of the exponent), τ^{-(M+1)/2}·y is
    /// fixed. Tries up to `budget` samples.
    pub fn fixed_point(&mut self, budget: usize) -> Result<GroupString> {
        if self.k != 2 {
            return Err(Error::Unsupported(format!("fixed points need k = 2, have k = {}", self.k)));
        }
        let e = self.bundled.require_exponent()?.clone();
        let (_, m) = split_two_part(&e)?;
        let half = BigInt::from((&m + 1u32) >> 1);
        for _ in 0..budget {
            let y = self.bundled.rand();
            let tau = self.bundled.mul(&y, &self.bundled.inv(&self.shift(&y)?));
            if !self.bundled.is_identity(&self.bundled.pow_u(&tau, &m)) {
                continue;
            }
            let h = self.bundled.mul(&self.bundled.pow(&tau, &-half.clone()), &y);
            if self.bundled.eq(&self.shift(&h)?, &h) {
                return Ok(h);
            }
        }
        Err(Error::BudgetExhausted("fixed point sampling"))
    }
}

/// Encloses the generator tuples in X^k; the caller guarantees that the i-th
/// component is the image of the first under the i-th power of an order-k
/// automorphism.
pub fn enrich(x: &BlackBox, k: usize, tuples: &[Vec<GroupString>]) -> Result<EnrichedBox> {
    if k < 1 {
        return Err(Error::InvalidOrder);
    }
    if tuples.is_empty() {
        return Err(Error::EmptySeeds);
    }
    let mut seeds = Vec::with_capacity(tuples.len());
    for t in tuples {
        if t.len() != k {
            return Err(Error::RaggedTuples { expected: k });
        }
        for c in t {
            x.check(c)?;
        }
        seeds.push(GroupString(t.iter().flat_map(|c| c.0.iter().copied()).collect()));
    }
    let bundled = x.power(k).generated_default(&seeds)?;
    Ok(EnrichedBox { base: x.clone(), k, bundled })
}

/// How a local automorphism acts on its generators.
#[derive(Clone)]
pub enum LocalMap {
    Identity,
    Inversion,
    Power(BigInt),
    /// x ↦ h⁻¹xh.
    Conjugation(GroupString),
    Custom(Evaluator),
}

impl fmt::Debug for LocalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalMap::Identity => f.write_str("Identity"),
            LocalMap::Inversion => f.write_str("Inversion"),
            LocalMap::Power(e) => write!(f, "Power({e})"),
            LocalMap::Conjugation(h) => write!(f, "Conjugation({h})"),
            LocalMap::Custom(_) => f.write_str("Custom"),
        }
    }
}

impl LocalMap {
    pub fn apply(&self, x: &BlackBox, g: &GroupString) -> Result<GroupString> {
        match self {
            LocalMap::Identity => Ok(g.clone()),
            LocalMap::Inversion => Ok(x.inv(g)),
            LocalMap::Power(e) => Ok(x.pow(g, e)),
            LocalMap::Conjugation(h) => Ok(x.conj(g, h)),
            LocalMap::Custom(f) => {
                let out = f(g)?;
                x.check(&out).map_err(|e| Error::Evaluator(e.to_string()))?;
                Ok(out)
            }
        }
    }
}

/// Generators of one subgroup with the automorphism restricted to it.
#[derive(Clone, Debug)]
pub struct Local {
    pub gens: Vec<GroupString>,
    pub map: LocalMap,
}

impl Local {
    pub fn new(gens: Vec<GroupString>, map: LocalMap) -> Self {
        Self { gens, map }
    }
}

/// Builds (g, φ(g), ..., φ^{k-1}(g)) for every local generator and encloses
/// them all in one enriched box.
pub fn amalgamate(x: &BlackBox, locals: &[Local], k: usize) -> Result<EnrichedBox> {
    if locals.is_empty() {
        return Err(Error::EmptyLocals);
    }
    if k < 1 {
        return Err(Error::InvalidOrder);
    }
    let mut tuples = Vec::new();
    for local in locals {
        for g in &local.gens {
            let mut t = vec![g.clone()];
            for _ in 1..k {
                let next = local.map.apply(x, t.last().unwrap())?;
                t.push(next);
            }
            tuples.push(t);
        }
    }
    enrich(x, k, &tuples)
}

/// ε·p as a signed exponent.
pub fn signed(e: &BigUint, negative: bool) -> BigInt {
    let v = BigInt::from(e.clone());
    if negative {
        -v
    } else {
        v
    }
}
