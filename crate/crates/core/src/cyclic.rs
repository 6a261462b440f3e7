//! Orders and square roots inside cyclic subgroups, and centralizer
//! sampling for involutions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bbcore::{BlackBox, GroupString};
use crate::error::{Error, Result};
use crate::harness::primality::is_probable_prime;

const TRIAL_LIMIT: u32 = 1_000_000;

/// An integer with its complete prime factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl FactoredInteger {
    /// Checks that the factors multiply to `value` and that every base passes
    /// Miller–Rabin.
    pub fn new(value: BigUint, mut factors: Vec<(BigUint, u32)>) -> Result<Self> {
        factors.retain(|(_, m)| *m > 0);
        factors.sort();
        let mut merged: Vec<(BigUint, u32)> = Vec::new();
        for (p, m) in factors {
            match merged.last_mut() {
                Some((q, k)) if *q == p => *k += m,
                _ => merged.push((p, m)),
            }
        }
        let product = merged.iter().fold(BigUint::one(), |acc, (p, m)| acc * p.pow(*m));
        if product != value || value.is_zero() {
            return Err(Error::IncompleteFactorization(value));
        }
        if merged.iter().any(|(p, _)| !is_probable_prime(p)) {
            return Err(Error::IncompleteFactorization(value));
        }
        Ok(Self { value, factors: merged })
    }

    /// Factors by trial division below 10⁶; a remaining cofactor is accepted
    /// only if it is a probable prime.
    pub fn trial(value: BigUint) -> Result<Self> {
        Self::with_hints(value, &[])
    }

    pub fn from_u64(v: u64) -> Self {
        Self::trial(BigUint::from(v)).expect("u64 values factor below the trial bound")
    }

    /// Divides out caller-supplied primes first, then falls back to [`FactoredInteger::trial`].
    pub fn with_hints(value: BigUint, hints: &[BigUint]) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::IncompleteFactorization(value));
        }
        let mut rest = value.clone();
        let mut factors = Vec::new();
        for h in hints {
            if h <= &BigUint::one() {
                continue;
            }
            let mut m = 0;
            while (&rest % h).is_zero() {
                rest /= h;
                m += 1;
            }
            if m > 0 {
                factors.push((h.clone(), m));
            }
        }
        let mut d = 2u32;
        while d <= TRIAL_LIMIT && BigUint::from(d) * BigUint::from(d) <= rest {
            let bd = BigUint::from(d);
            let mut m = 0;
            while (&rest % &bd).is_zero() {
                rest /= &bd;
                m += 1;
            }
            if m > 0 {
                factors.push((bd, m));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > BigUint::one() {
            if !is_probable_prime(&rest) {
                return Err(Error::IncompleteFactorization(value));
            }
            factors.push((rest, 1));
        }
        Self::new(value, factors)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// The factorization of value / 2^s (the odd part).
    pub fn odd_part(&self) -> FactoredInteger {
        let factors: Vec<_> = self.factors.iter().filter(|(p, _)| p != &BigUint::from(2u32)).cloned().collect();
        let value = factors.iter().fold(BigUint::one(), |acc, (p, m)| acc * p.pow(*m));
        Self { value, factors }
    }

    /// Product of two factored integers.
    pub fn times(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        Self::new(&self.value * &other.value, f).expect("product of factorizations")
    }

    /// Factorization of a divisor, reusing these primes.
    pub fn divisor(&self, d: &BigUint) -> Result<FactoredInteger> {
        if d.is_zero() || !(&self.value % d).is_zero() {
            return Err(Error::IncompleteFactorization(d.clone()));
        }
        let mut rest = d.clone();
        let mut factors = Vec::new();
        for (p, _) in &self.factors {
            let mut m = 0;
            while (&rest % p).is_zero() {
                rest /= p;
                m += 1;
            }
            factors.push((p.clone(), m));
        }
        Self::new(d.clone(), factors)
    }
}

impl fmt::Display for FactoredInteger {
    /// `a^b·c`, primes ascending; `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|(p, m)| if *m == 1 { p.to_string() } else { format!("{p}^{m}") }).collect();
        f.write_str(&parts.join("·"))
    }
}

impl FromStr for FactoredInteger {
    type Err = Error;

    /// Accepts `a^b·c` (or `*` as separator). A bare integer is trial-factored.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad factored integer {s:?}"));
        if !s.contains(['·', '*', '^']) {
            return Self::trial(s.parse().map_err(|_| bad())?);
        }
        let mut factors = Vec::new();
        for part in s.split(['·', '*']) {
            let part = part.trim();
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad())?),
                None => (part, 1),
            };
            factors.push((base.parse::<BigUint>().map_err(|_| bad())?, exp));
        }
        let value = factors.iter().fold(BigUint::one(), |acc, (p, m)| acc * p.pow(*m));
        Self::new(value, factors)
    }
}

/// E = 2^s · m with m odd.
pub fn split_two_part(e: &BigUint) -> Result<(u64, BigUint)> {
    if e.is_zero() {
        return Err(Error::InvalidOrder);
    }
    let s = e.trailing_zeros().unwrap_or(0);
    Ok((s, e >> s))
}

/// The least divisor d of E with x^d = 1.
pub fn order_exact(x_box: &BlackBox, x: &GroupString, e: &FactoredInteger) -> Result<BigUint> {
    if !x_box.is_identity(&x_box.pow_u(x, e.value())) {
        return Err(Error::WrongExponent);
    }
    let mut d = e.value().clone();
    for (p, _) in e.factors() {
        while (&d % p).is_zero() {
            let smaller = &d / p;
            if x_box.is_identity(&x_box.pow_u(x, &smaller)) {
                d = smaller;
            } else {
                break;
            }
        }
    }
    Ok(d)
}

/// All z in ⟨x⟩ with z² = y, for y in ⟨x⟩: Tonelli–Shanks run inside ⟨x⟩.
/// Returns zero, one or two strings.
pub fn rho(x_box: &BlackBox, x: &GroupString, y: &GroupString, e: &FactoredInteger) -> Result<Vec<GroupString>> {
    let d = order_exact(x_box, x, e)?;
    let (s, m) = split_two_part(&d)?;
    let half_m = (&m + 1u32) >> 1;
    if s == 0 {
        return Ok(vec![x_box.pow_u(y, &half_m)]);
    }
    let half_d = &d >> 1;
    if !x_box.is_identity(&x_box.pow_u(y, &half_d)) {
        return Ok(Vec::new());
    }
    // c generates the Sylow 2-subgroup of ⟨x⟩, hence is a non-square there
    let mut c = x_box.pow_u(x, &m);
    let mut r = x_box.pow_u(y, &half_m);
    let mut t = x_box.pow_u(y, &m);
    let mut big_m = s;
    while !x_box.is_identity(&t) {
        let mut i = 0u64;
        let mut t2 = t.clone();
        while !x_box.is_identity(&t2) {
            t2 = x_box.mul(&t2, &t2);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(big_m - i - 1) {
            b = x_box.mul(&b, &b);
        }
        r = x_box.mul(&r, &b);
        c = x_box.mul(&b, &b);
        t = x_box.mul(&t, &c);
        big_m = i;
    }
    let other = x_box.mul(&r, &x_box.pow_u(x, &half_d));
    Ok(vec![r, other])
}

/// The unique square root y^{(m+1)/2} of y in a cyclic group of odd order m.
pub fn odd_sqrt(x_box: &BlackBox, _x: &GroupString, y: &GroupString, m: &BigUint) -> Result<GroupString> {
    if m.is_even() {
        return Err(Error::EvenOrder(m.clone()));
    }
    Ok(x_box.pow_u(y, &((m + 1u32) >> 1)))
}

/// The involution of ⟨x⟩, if |x| is even. `e` must annihilate x.
pub fn involution_from(x_box: &BlackBox, x: &GroupString, e: &BigUint) -> Option<GroupString> {
    let (_, m) = split_two_part(e).ok()?;
    let mut z = x_box.pow_u(x, &m);
    if x_box.is_identity(&z) {
        return None;
    }
    loop {
        let z2 = x_box.mul(&z, &z);
        if x_box.is_identity(&z2) {
            return Some(z);
        }
        z = z2;
    }
}

pub fn is_involution(x_box: &BlackBox, i: &GroupString) -> bool {
    !x_box.is_identity(i) && x_box.is_identity(&x_box.mul(i, i))
}

/// One element of C(i): with t = i·i^g, returns g·t^k when |t| = 2k+1 and the
/// involution t^k when |t| = 2k.
pub fn zeta_sample(x_box: &mut BlackBox, i: &GroupString, e: &FactoredInteger) -> Result<GroupString> {
    if !is_involution(x_box, i) {
        return Err(Error::NotInvolution);
    }
    let g = x_box.rand();
    zeta_from(x_box, i, &g, e)
}

/// [`zeta_sample`] for a given g.
pub fn zeta_from(x_box: &BlackBox, i: &GroupString, g: &GroupString, e: &FactoredInteger) -> Result<GroupString> {
    let t = x_box.mul(i, &x_box.conj(i, g));
    let d = order_exact(x_box, &t, e)?;
    if d.is_odd() {
        Ok(x_box.mul(g, &x_box.pow_u(&t, &(d >> 1))))
    } else {
        Ok(x_box.pow_u(&t, &(d >> 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bbcore::matrix::{bb_matrix, Matrix};
    use crate::bbcore::small::CyclicGroup;
    use crate::ffield::ExplicitField;
    use std::collections::HashSet;
    use std::sync::Arc;

    fn cyclic_box(n: u64) -> (BlackBox, Arc<CyclicGroup>) {
        let g = Arc::new(CyclicGroup::new(n));
        (BlackBox::native(g.clone(), Some(BigUint::from(n)), 1), g)
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_two_part(&BigUint::from(24u32)).unwrap(), (3, BigUint::from(3u32)));
        assert_eq!(split_two_part(&BigUint::from(7u32)).unwrap(), (0, BigUint::from(7u32)));
        assert_eq!(split_two_part(&BigUint::from(1024u32)).unwrap(), (10, BigUint::one()));
        assert!(split_two_part(&BigUint::zero()).is_err());
    }

    #[test]
    fn factored_parsing_and_validation() {
        let f: FactoredInteger = "2^4·3".parse().unwrap();
        assert_eq!(f.value(), &BigUint::from(48u32));
        assert_eq!(f.to_string(), "2^4·3");
        assert_eq!("2^4*3".parse::<FactoredInteger>().unwrap(), f);
        assert_eq!("48".parse::<FactoredInteger>().unwrap(), f);
        assert!("2^4·9".parse::<FactoredInteger>().is_err());
        assert!(FactoredInteger::new(BigUint::from(10u32), vec![(BigUint::from(2u32), 1)]).is_err());
        assert_eq!(FactoredInteger::from_u64(1).to_string(), "1");
    }

    #[test]
    fn large_factorization_with_hints() {
        let p: BigUint = "622288097498926496141095869268883999563096063592498055290461".parse().unwrap();
        let hints: Vec<BigUint> = ["570300372023", "41062172279", "176970255507089899085755393169"].iter().map(|s| s.parse().unwrap()).collect();
        let f = FactoredInteger::with_hints(&p - 1u32, &hints).unwrap();
        assert_eq!(f.factors().len(), 9);
        assert!(FactoredInteger::trial(&p * &p).is_err());
    }

    #[test]
    fn order_of_diag_3_5() {
        let f7 = Arc::new(ExplicitField::prime(BigUint::from(7u32)));
        let m = Matrix::from_u64(&f7, &[&[3, 0], &[0, 5]]);
        let (bb, g) = bb_matrix(f7.clone(), 2, std::slice::from_ref(&m), false, 1).unwrap();
        let e = "2^4·3".parse().unwrap();
        assert_eq!(order_exact(&bb, &g.encode(&m), &e).unwrap(), BigUint::from(6u32));
        assert_eq!(order_exact(&bb, &bb.identity(), &e).unwrap(), BigUint::one());
        // 2^4 alone misses the factor 3
        assert!(matches!(order_exact(&bb, &g.encode(&m), &"2^4".parse().unwrap()), Err(Error::WrongExponent)));
    }

    #[test]
    fn rho_examples_in_c8() {
        let (bb, c) = cyclic_box(8);
        let e = FactoredInteger::from_u64(8);
        let x = c.encode(1);
        let set = |v: Vec<GroupString>| v.into_iter().map(|s| c.decode(&s)).collect::<HashSet<_>>();
        assert_eq!(set(rho(&bb, &x, &c.encode(2), &e).unwrap()), HashSet::from([1, 5]));
        assert_eq!(set(rho(&bb, &x, &c.encode(0), &e).unwrap()), HashSet::from([0, 4]));
        assert!(rho(&bb, &x, &x, &e).unwrap().is_empty());
    }

    #[test]
    fn rho_matches_brute_force_small() {
        for d in 1..=64u64 {
            let (bb, c) = cyclic_box(d);
            let e = FactoredInteger::from_u64(d);
            let x = c.encode(1);
            for a in 0..d {
                let got: HashSet<u64> = rho(&bb, &x, &c.encode(a), &e).unwrap().iter().map(|s| c.decode(s)).collect();
                let want: HashSet<u64> = (0..d).filter(|z| (2 * z) % d == a).collect();
                assert_eq!(got, want, "d={d} a={a}");
            }
        }
    }

    #[test]
    fn odd_sqrt_examples() {
        let (bb, c) = cyclic_box(15);
        let x = c.encode(1);
        let m = BigUint::from(15u32);
        assert_eq!(c.decode(&odd_sqrt(&bb, &x, &c.encode(4), &m).unwrap()), 2);
        assert_eq!(c.decode(&odd_sqrt(&bb, &x, &bb.identity(), &m).unwrap()), 0);
        assert!(matches!(odd_sqrt(&bb, &x, &x, &BigUint::from(8u32)), Err(Error::EvenOrder(_))));
    }

    #[test]
    fn involution_examples() {
        let (bb, c) = cyclic_box(12);
        let e = BigUint::from(12u32);
        assert_eq!(c.decode(&involution_from(&bb, &c.encode(1), &e).unwrap()), 6);
        assert!(involution_from(&bb, &c.encode(4), &e).is_none());
        assert!(involution_from(&bb, &bb.identity(), &e).is_none());
    }

    #[test]
    fn zeta_commutes_on_psl2_9() {
        let f9 = Arc::new(ExplicitField::standard(BigUint::from(3u32), 2).unwrap());
        let gens = [Matrix::from_u64(&f9, &[&[1, 1], &[0, 1]]), Matrix::from_u64(&f9, &[&[1, 0], &[1, 1]])];
        let (mut bb, _) = bb_matrix(f9.clone(), 2, &gens, true, 5).unwrap();
        let e = FactoredInteger::trial(bb.exponent().unwrap().clone()).unwrap();
        let i = loop {
            let x = bb.rand();
            if let Some(i) = involution_from(&bb, &x, e.value()) {
                break i;
            }
        };
        for _ in 0..200 {
            let z = zeta_sample(&mut bb, &i, &e).unwrap();
            assert!(bb.commute(&z, &i));
        }
        // commuting g returns g itself
        assert!(bb.eq(&zeta_from(&bb, &i, &i, &e).unwrap(), &i));
        let one = bb.identity();
        assert!(matches!(zeta_sample(&mut bb, &one, &e), Err(Error::NotInvolution)));
    }
}
