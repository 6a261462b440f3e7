//! Black boxes: opaque fixed-length strings with sampling, multiplication,
//! inversion and equality oracles, plus an optional global exponent.

pub mod exponent;
pub mod io;
pub mod matrix;
pub mod replacement;
pub mod small;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
pub use exponent::global_exponent_gl;
pub use replacement::PrState;

/// A group element as the box hands it out. Several strings may encrypt the
/// same element; only [`BlackBox::eq`] decides.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupString(pub Vec<u8>);

impl GroupString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s).map(GroupString).map_err(|e| Error::Parse(format!("bad hex string: {e}")))
    }

    pub fn concat(parts: &[&GroupString]) -> Self {
        GroupString(parts.iter().flat_map(|p| p.0.iter().copied()).collect())
    }
}

impl fmt::Debug for GroupString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupString({})", self.to_hex())
    }
}

impl fmt::Display for GroupString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// The oracle side of a black box. Implementations may assume every string
/// they receive has length [`GroupOracle::string_len`].
pub trait GroupOracle: Send + Sync {
    fn string_len(&self) -> usize;
    fn identity(&self) -> GroupString;
    fn mul(&self, x: &GroupString, y: &GroupString) -> GroupString;
    fn inv(&self, x: &GroupString) -> GroupString;
    fn eq(&self, x: &GroupString, y: &GroupString) -> bool;

    /// Uniform sampling, for backends that can do it directly.
    fn sample(&self, _rng: &mut dyn RngCore) -> Option<GroupString> {
        None
    }
}

/// Componentwise oracle on concatenated strings.
pub struct ProductOracle {
    parts: Vec<Arc<dyn GroupOracle>>,
    offsets: Vec<usize>,
}

impl ProductOracle {
    pub fn new(parts: Vec<Arc<dyn GroupOracle>>) -> Self {
        let mut offsets = vec![0];
        for p in &parts {
            offsets.push(offsets.last().unwrap() + p.string_len());
        }
        Self { parts, offsets }
    }

    fn piece(&self, x: &GroupString, i: usize) -> GroupString {
        GroupString(x.0[self.offsets[i]..self.offsets[i + 1]].to_vec())
    }

    fn map2(&self, x: &GroupString, y: &GroupString, f: impl Fn(&dyn GroupOracle, &GroupString, &GroupString) -> GroupString) -> GroupString {
        let mut out = Vec::with_capacity(self.string_len());
        for (i, p) in self.parts.iter().enumerate() {
            out.extend(f(p.as_ref(), &self.piece(x, i), &self.piece(y, i)).0);
        }
        GroupString(out)
    }
}

impl GroupOracle for ProductOracle {
    fn string_len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn identity(&self) -> GroupString {
        GroupString(self.parts.iter().flat_map(|p| p.identity().0).collect())
    }

    fn mul(&self, x: &GroupString, y: &GroupString) -> GroupString {
        self.map2(x, y, |p, a, b| p.mul(a, b))
    }

    fn inv(&self, x: &GroupString) -> GroupString {
        self.map2(x, x, |p, a, _| p.inv(a))
    }

    fn eq(&self, x: &GroupString, y: &GroupString) -> bool {
        self.parts.iter().enumerate().all(|(i, p)| p.eq(&self.piece(x, i), &self.piece(y, i)))
    }
}

/// Equality modulo a list of central strings: x ~ y iff x = y·z for some z.
pub struct CentralQuotient {
    inner: Arc<dyn GroupOracle>,
    central: Vec<GroupString>,
}

impl CentralQuotient {
    pub fn new(inner: Arc<dyn GroupOracle>, central: Vec<GroupString>) -> Self {
        Self { inner, central }
    }
}

impl GroupOracle for CentralQuotient {
    fn string_len(&self) -> usize {
        self.inner.string_len()
    }
    fn identity(&self) -> GroupString {
        self.inner.identity()
    }
    fn mul(&self, x: &GroupString, y: &GroupString) -> GroupString {
        self.inner.mul(x, y)
    }
    fn inv(&self, x: &GroupString) -> GroupString {
        self.inner.inv(x)
    }
    fn eq(&self, x: &GroupString, y: &GroupString) -> bool {
        self.inner.eq(x, y) || self.central.iter().any(|z| self.inner.eq(x, &self.inner.mul(y, z)))
    }
}

#[derive(Clone)]
enum Sampler {
    Native,
    Replacement(PrState),
    Independent(Vec<BlackBox>),
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Default product replacement parameters for `s` seeds: (slots, burn-in).
pub fn default_replacement(s: usize) -> (usize, usize) {
    ((2 * s).max(10), 50 * s)
}

/// A black box group.
///
/// Cloning forks: the clone gets its own randomness stream derived from the
/// parent's seed and a fork counter, so clones never replay each other.
pub struct BlackBox {
    oracle: Arc<dyn GroupOracle>,
    sampler: Sampler,
    exponent: Option<BigUint>,
    seed: u64,
    forks: AtomicU64,
    rng: ChaCha8Rng,
}

impl Clone for BlackBox {
    fn clone(&self) -> Self {
        let fork = self.forks.fetch_add(1, Ordering::Relaxed) + 1;
        let seed = splitmix(self.seed ^ splitmix(fork));
        Self {
            oracle: self.oracle.clone(),
            sampler: self.sampler.clone(),
            exponent: self.exponent.clone(),
            seed,
            forks: AtomicU64::new(0),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl fmt::Debug for BlackBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlackBox").field("string_len", &self.string_len()).field("exponent", &self.exponent).field("seed", &self.seed).finish()
    }
}

impl BlackBox {
    /// A box sampling through the oracle's native sampler.
    pub fn native(oracle: Arc<dyn GroupOracle>, exponent: Option<BigUint>, seed: u64) -> Self {
        Self::with_sampler(oracle, Sampler::Native, exponent, seed)
    }

    fn with_sampler(oracle: Arc<dyn GroupOracle>, sampler: Sampler, exponent: Option<BigUint>, seed: u64) -> Self {
        Self { oracle, sampler, exponent, seed, forks: AtomicU64::new(0), rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// The box for ⟨seeds⟩, sampled by product replacement with default parameters.
    pub fn from_generators(oracle: Arc<dyn GroupOracle>, seeds: &[GroupString], exponent: Option<BigUint>, seed: u64) -> Result<Self> {
        let (r, burn) = default_replacement(seeds.len());
        let base = Self::native(oracle, exponent, seed);
        base.generated(seeds, r, burn)
    }

    pub fn oracle(&self) -> &Arc<dyn GroupOracle> {
        &self.oracle
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Restarts the randomness stream from `seed`.
    pub fn reseed(&mut self, seed: u64) {
        self.seed = seed;
        self.forks = AtomicU64::new(0);
        self.rng = ChaCha8Rng::seed_from_u64(seed);
        if let Sampler::Independent(parts) = &mut self.sampler {
            for (i, p) in parts.iter_mut().enumerate() {
                p.reseed(splitmix(seed ^ (i as u64 + 1)));
            }
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn string_len(&self) -> usize {
        self.oracle.string_len()
    }

    pub fn exponent(&self) -> Option<&BigUint> {
        self.exponent.as_ref()
    }

    pub fn require_exponent(&self) -> Result<&BigUint> {
        self.exponent.as_ref().ok_or(Error::MissingExponent)
    }

    pub fn set_exponent(&mut self, e: Option<BigUint>) {
        self.exponent = e;
    }

    /// Length check for strings arriving from outside the crate.
    pub fn check(&self, x: &GroupString) -> Result<()> {
        if x.len() != self.string_len() {
            return Err(Error::LengthMismatch { expected: self.string_len(), found: x.len() });
        }
        Ok(())
    }

    pub fn identity(&self) -> GroupString {
        self.oracle.identity()
    }

    pub fn rand(&mut self) -> GroupString {
        match &mut self.sampler {
            Sampler::Native => self.oracle.sample(&mut self.rng).expect("backend has no native sampler; build the box from generators"),
            Sampler::Replacement(state) => state.step(self.oracle.as_ref(), &mut self.rng).clone(),
            Sampler::Independent(parts) => {
                let pieces: Vec<GroupString> = parts.iter_mut().map(|b| b.rand()).collect();
                GroupString(pieces.into_iter().flat_map(|p| p.0).collect())
            }
        }
    }

    /// # Panics
    /// On strings of the wrong length; use [`BlackBox::check`] on untrusted input.
    pub fn mul(&self, x: &GroupString, y: &GroupString) -> GroupString {
        assert_eq!(x.len(), self.string_len(), "string length");
        assert_eq!(y.len(), self.string_len(), "string length");
        self.oracle.mul(x, y)
    }

    pub fn inv(&self, x: &GroupString) -> GroupString {
        assert_eq!(x.len(), self.string_len(), "string length");
        self.oracle.inv(x)
    }

    pub fn eq(&self, x: &GroupString, y: &GroupString) -> bool {
        assert_eq!(x.len(), self.string_len(), "string length");
        assert_eq!(y.len(), self.string_len(), "string length");
        self.oracle.eq(x, y)
    }

    pub fn try_mul(&self, x: &GroupString, y: &GroupString) -> Result<GroupString> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.oracle.mul(x, y))
    }

    pub fn try_inv(&self, x: &GroupString) -> Result<GroupString> {
        self.check(x)?;
        Ok(self.oracle.inv(x))
    }

    pub fn try_eq(&self, x: &GroupString, y: &GroupString) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.oracle.eq(x, y))
    }

    pub fn is_identity(&self, x: &GroupString) -> bool {
        self.eq(x, &self.identity())
    }

    pub fn pow_u(&self, x: &GroupString, e: &BigUint) -> GroupString {
        let mut result = self.identity();
        for i in (0..e.bits()).rev() {
            result = self.oracle.mul(&result, &result);
            if e.bit(i) {
                result = self.oracle.mul(&result, x);
            }
        }
        result
    }

    pub fn pow(&self, x: &GroupString, e: &BigInt) -> GroupString {
        match e.sign() {
            Sign::Minus => self.pow_u(&self.inv(x), e.magnitude()),
            _ => self.pow_u(x, e.magnitude()),
        }
    }

    pub fn pow_i(&self, x: &GroupString, e: i64) -> GroupString {
        self.pow(x, &BigInt::from(e))
    }

    /// x^g = g⁻¹ x g.
    pub fn conj(&self, x: &GroupString, g: &GroupString) -> GroupString {
        self.mul(&self.mul(&self.inv(g), x), g)
    }

    pub fn commute(&self, x: &GroupString, y: &GroupString) -> bool {
        self.eq(&self.mul(x, y), &self.mul(y, x))
    }

    /// The box for the subgroup generated by `seeds`, with `r` slots advanced
    /// `burn_in` steps. The exponent carries over.
    pub fn generated(&self, seeds: &[GroupString], r: usize, burn_in: usize) -> Result<BlackBox> {
        if seeds.is_empty() {
            return Err(Error::EmptySeeds);
        }
        for s in seeds {
            self.check(s)?;
        }
        let mut child = self.clone();
        let mut state = PrState::new(self.oracle.as_ref(), seeds, r);
        for _ in 0..burn_in {
            state.step(self.oracle.as_ref(), &mut child.rng);
        }
        child.sampler = Sampler::Replacement(state);
        Ok(child)
    }

    /// [`BlackBox::generated`] with default parameters.
    pub fn generated_default(&self, seeds: &[GroupString]) -> Result<BlackBox> {
        let (r, burn) = default_replacement(seeds.len());
        self.generated(seeds, r, burn)
    }

    /// X × Y with independent componentwise sampling.
    pub fn direct_product(&self, other: &BlackBox) -> BlackBox {
        Self::product_of(&[self, other])
    }

    /// X^k.
    pub fn power(&self, k: usize) -> BlackBox {
        let parts: Vec<&BlackBox> = std::iter::repeat_n(self, k).collect();
        Self::product_of(&parts)
    }

    fn product_of(parts: &[&BlackBox]) -> BlackBox {
        let oracle = ProductOracle::new(parts.iter().map(|b| b.oracle.clone()).collect());
        let exponent = parts.iter().try_fold(BigUint::from(1u32), |acc, b| b.exponent.as_ref().map(|e| acc.lcm(e)));
        let forks: Vec<BlackBox> = parts.iter().map(|b| (*b).clone()).collect();
        let seed = forks.iter().fold(0u64, |acc, b| splitmix(acc ^ b.seed));
        Self::with_sampler(Arc::new(oracle), Sampler::Independent(forks), exponent, seed)
    }

    /// The same box with equality taken modulo the given central strings.
    pub fn modulo_central(&self, central: Vec<GroupString>) -> BlackBox {
        let mut child = self.clone();
        child.oracle = Arc::new(CentralQuotient::new(self.oracle.clone(), central));
        child
    }

    /// A box sharing this box's strings and sampler but with another oracle
    /// (for example the same group seen with exact equality).
    pub fn with_oracle(&self, oracle: Arc<dyn GroupOracle>) -> BlackBox {
        let mut child = self.clone();
        child.oracle = oracle;
        child
    }
}
