//! Miller–Rabin run through a (Z/nZ)* black box.
//!
//! Strong pseudoprime witnesses are found with the same power maps and
//! 2-part splitting used inside cyclic subgroups. "Composite" is always
//! correct; "probably prime" errs with probability at most 4^-rounds.

use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::bbcore::small::ModularUnits;
use crate::bbcore::BlackBox;
use crate::cyclic::split_two_part;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Composite,
    ProbablyPrime,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Composite => "composite",
            Verdict::ProbablyPrime => "probably-prime",
        })
    }
}

pub fn miller_rabin(n: &BigUint, rounds: u32, seed: u64) -> Result<Verdict> {
    if n.is_even() || n < &BigUint::from(3u32) {
        return Err(Error::EvenModulus(n.clone()));
    }
    let units = Arc::new(ModularUnits::new(n.clone()));
    let mut bb = BlackBox::native(units.clone(), None, seed);
    let minus_one = units.encode(&(n - 1u32));
    let (s, m) = split_two_part(&(n - 1u32))?;
    'rounds: for _ in 0..rounds {
        let a = bb.rand();
        let mut x = bb.pow_u(&a, &m);
        if bb.is_identity(&x) || bb.eq(&x, &minus_one) {
            continue;
        }
        for _ in 1..s {
            x = bb.mul(&x, &x);
            if bb.eq(&x, &minus_one) {
                continue 'rounds;
            }
        }
        return Ok(Verdict::Composite);
    }
    Ok(Verdict::ProbablyPrime)
}

/// Probable-prime check for any n, 20 rounds with a fixed seed.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(4u32) {
        return n > &BigUint::one();
    }
    if n.is_even() {
        return false;
    }
    for small in [3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = BigUint::from(small);
        if n == &s {
            return true;
        }
        if (n % &s) == BigUint::ZERO {
            return false;
        }
    }
    matches!(miller_rabin(n, 20, 0x6d72), Ok(Verdict::ProbablyPrime))
}
