//! Small arithmetic backends with native uniform sampling.

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use super::{GroupOracle, GroupString};

/// Z/nZ written additively; strings are 8-byte big-endian residues.
pub struct CyclicGroup {
    n: u64,
}

impl CyclicGroup {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        Self { n }
    }

    pub fn encode(&self, v: u64) -> GroupString {
        GroupString((v % self.n).to_be_bytes().to_vec())
    }

    pub fn decode(&self, s: &GroupString) -> u64 {
        u64::from_be_bytes(s.0[..8].try_into().expect("8-byte string"))
    }
}

impl GroupOracle for CyclicGroup {
    fn string_len(&self) -> usize {
        8
    }
    fn identity(&self) -> GroupString {
        self.encode(0)
    }
    fn mul(&self, x: &GroupString, y: &GroupString) -> GroupString {
        let s = (self.decode(x) as u128 + self.decode(y) as u128) % self.n as u128;
        self.encode(s as u64)
    }
    fn inv(&self, x: &GroupString) -> GroupString {
        self.encode((self.n - self.decode(x) % self.n) % self.n)
    }
    fn eq(&self, x: &GroupString, y: &GroupString) -> bool {
        self.decode(x) % self.n == self.decode(y) % self.n
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Option<GroupString> {
        Some(self.encode(rng.gen_range(0..self.n)))
    }
}

/// (Z/nZ)* for odd n ≥ 3. Sampling is uniform on units by rejection.
pub struct ModularUnits {
    n: BigUint,
    width: usize,
}

impl ModularUnits {
    pub fn new(n: BigUint) -> Self {
        let width = (n.bits() as usize).div_ceil(8).max(1);
        Self { n, width }
    }

    pub fn modulus(&self) -> &BigUint {
        &self.n
    }

    pub fn encode(&self, v: &BigUint) -> GroupString {
        let v = v % &self.n;
        let bytes = if v.is_zero() { Vec::new() } else { v.to_bytes_be() };
        let mut out = vec![0u8; self.width - bytes.len()];
        out.extend(bytes);
        GroupString(out)
    }

    pub fn decode(&self, s: &GroupString) -> BigUint {
        BigUint::from_bytes_be(&s.0)
    }
}

impl GroupOracle for ModularUnits {
    fn string_len(&self) -> usize {
        self.width
    }
    fn identity(&self) -> GroupString {
        self.encode(&BigUint::one())
    }
    fn mul(&self, x: &GroupString, y: &GroupString) -> GroupString {
        self.encode(&(self.decode(x) * self.decode(y)))
    }
    fn inv(&self, x: &GroupString) -> GroupString {
        let a = BigInt::from(self.decode(x));
        let n = BigInt::from(self.n.clone());
        let g = a.extended_gcd(&n);
        assert!(g.gcd.is_one(), "not a unit");
        let r = ((g.x % &n) + &n) % &n;
        self.encode(&r.to_biguint().expect("non-negative"))
    }
    fn eq(&self, x: &GroupString, y: &GroupString) -> bool {
        self.decode(x) % &self.n == self.decode(y) % &self.n
    }
    fn sample(&self, rng: &mut dyn RngCore) -> Option<GroupString> {
        loop {
            let a = rng.gen_biguint_range(&BigUint::one(), &self.n);
            if a.gcd(&self.n).is_one() {
                return Some(self.encode(&a));
            }
        }
    }
}
