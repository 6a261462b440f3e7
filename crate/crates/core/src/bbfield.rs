//! Black box fields of known characteristic and the prime-subfield morphism.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bbcore::GroupString;
use crate::error::{Error, Result};
use crate::ffield::ExplicitField;

/// Oracle access to a field.
pub trait FieldOracle: Send + Sync {
    fn string_len(&self) -> usize;
    fn zero(&self) -> GroupString;
    fn one(&self) -> GroupString;
    fn add(&self, a: &GroupString, b: &GroupString) -> GroupString;
    fn neg(&self, a: &GroupString) -> GroupString;
    fn mul(&self, a: &GroupString, b: &GroupString) -> GroupString;
    /// None for zero.
    fn inv(&self, a: &GroupString) -> Option<GroupString>;
    fn eq(&self, a: &GroupString, b: &GroupString) -> bool;
    fn sample(&self, rng: &mut dyn RngCore) -> GroupString;
}

/// A field behind an oracle, together with its characteristic.
#[derive(Clone)]
pub struct BlackBoxField {
    oracle: Arc<dyn FieldOracle>,
    p: BigUint,
    rng: ChaCha8Rng,
}

impl fmt::Debug for BlackBoxField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlackBoxField").field("p", &self.p).field("len", &self.oracle.string_len()).finish()
    }
}

impl BlackBoxField {
    pub fn new(oracle: Arc<dyn FieldOracle>, p: BigUint, seed: u64) -> Self {
        Self { oracle, p, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn characteristic(&self) -> &BigUint {
        &self.p
    }

    pub fn string_len(&self) -> usize {
        self.oracle.string_len()
    }

    pub fn zero(&self) -> GroupString {
        self.oracle.zero()
    }

    pub fn one(&self) -> GroupString {
        self.oracle.one()
    }

    pub fn rand(&mut self) -> GroupString {
        self.oracle.sample(&mut self.rng)
    }

    pub fn add(&self, a: &GroupString, b: &GroupString) -> GroupString {
        self.oracle.add(a, b)
    }

    pub fn neg(&self, a: &GroupString) -> GroupString {
        self.oracle.neg(a)
    }

    pub fn mul(&self, a: &GroupString, b: &GroupString) -> GroupString {
        self.oracle.mul(a, b)
    }

    pub fn inv(&self, a: &GroupString) -> Result<GroupString> {
        self.oracle.inv(a).ok_or(Error::ZeroInverse)
    }

    pub fn eq(&self, a: &GroupString, b: &GroupString) -> bool {
        self.oracle.eq(a, b)
    }
}

struct ExplicitFieldOracle(Arc<ExplicitField>);

impl ExplicitFieldOracle {
    fn get(&self, s: &GroupString) -> crate::ffield::FieldElement {
        self.0.decode(s.as_bytes()).expect("well-formed field string")
    }

    fn put(&self, a: &crate::ffield::FieldElement) -> GroupString {
        GroupString(self.0.encode(a))
    }
}

impl FieldOracle for ExplicitFieldOracle {
    fn string_len(&self) -> usize {
        self.0.element_len()
    }
    fn zero(&self) -> GroupString {
        self.put(&self.0.zero())
    }
    fn one(&self) -> GroupString {
        self.put(&self.0.one())
    }
    fn add(&self, a: &GroupString, b: &GroupString) -> GroupString {
        self.put(&self.0.add(&self.get(a), &self.get(b)))
    }
    fn neg(&self, a: &GroupString) -> GroupString {
        self.put(&self.0.neg(&self.get(a)))
    }
    fn mul(&self, a: &GroupString, b: &GroupString) -> GroupString {
        self.put(&self.0.mul(&self.get(a), &self.get(b)))
    }
    fn inv(&self, a: &GroupString) -> Option<GroupString> {
        self.0.inv(&self.get(a)).ok().map(|x| self.put(&x))
    }
    fn eq(&self, a: &GroupString, b: &GroupString) -> bool {
        a == b
    }
    fn sample(&self, rng: &mut dyn RngCore) -> GroupString {
        self.put(&self.0.random(rng))
    }
}

/// An explicit field as a black box; strings are the element encodings.
pub fn bbf_wrap(f: Arc<ExplicitField>, seed: u64) -> BlackBoxField {
    let p = f.characteristic().clone();
    BlackBoxField::new(Arc::new(ExplicitFieldOracle(f)), p, seed)
}

/// m·1 by double-and-add, with m reduced mod p.
pub fn bbf_prime_embed(k: &BlackBoxField, m: &BigUint) -> GroupString {
    let m = m % k.characteristic();
    let mut acc = k.zero();
    let one = k.one();
    for i in (0..m.bits()).rev() {
        acc = k.add(&acc, &acc);
        if m.bit(i) {
            acc = k.add(&acc, &one);
        }
    }
    acc
}

/// The m in [0, p) with m·1 = x, by scanning.
pub fn bbf_small_dlog(k: &BlackBoxField, x: &GroupString) -> Result<u64> {
    let p = k.characteristic().to_u64().ok_or_else(|| Error::Unsupported("characteristic too large to scan".into()))?;
    let one = k.one();
    let mut s = k.zero();
    for m in 0..p {
        if k.eq(&s, x) {
            return Ok(m);
        }
        s = k.add(&s, &one);
    }
    Err(Error::NotInPrimeSubfield(x.to_hex()))
}

/// A map of field strings.
pub type FieldMap = Arc<dyn Fn(&GroupString) -> Result<GroupString> + Send + Sync>;

/// Extends a morphism of prime subfields K₀ → L₀ to a morphism K → L.
pub trait MorphismExtension {
    fn extend(&self, k: &BlackBoxField, l: &BlackBoxField, prime_map: FieldMap) -> Result<FieldMap>;
}

/// The only shipped extension: K and L share one backend and the prime map
/// is the canonical one, so the extension is the identity.
pub struct SameBackend;

impl MorphismExtension for SameBackend {
    fn extend(&self, k: &BlackBoxField, l: &BlackBoxField, prime_map: FieldMap) -> Result<FieldMap> {
        if !Arc::ptr_eq(&k.oracle, &l.oracle) {
            return Err(Error::Unsupported("extension between different backends".into()));
        }
        let one = k.one();
        let image = prime_map(&one)?;
        if !l.eq(&image, &l.one()) {
            return Err(Error::Unsupported("prime map does not fix the unit".into()));
        }
        Ok(Arc::new(|x: &GroupString| Ok(x.clone())))
    }
}

/// True when p copies of the unit sum to zero.
pub fn has_characteristic(k: &BlackBoxField) -> bool {
    let p = k.characteristic();
    let one = k.one();
    let mut acc = k.zero();
    for bit in (0..p.bits()).rev() {
        acc = k.add(&acc, &acc);
        if p.bit(bit) {
            acc = k.add(&acc, &one);
        }
    }
    k.eq(&acc, &k.zero())
}
