//! Frobenius automorphisms of black boxes encrypting (P)SL₂(p^k), and their
//! amalgamation over a Curtis–Tits datum for higher rank.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::bbcore::{BlackBox, GroupString};
use crate::cyclic::{involution_from, is_involution, order_exact, zeta_sample, FactoredInteger};
use crate::error::{Error, Result};
use crate::morphisms::{amalgamate, signed, EnrichedBox, Local, LocalMap};
use crate::twisted::CurtisTitsDatum;

/// Parameters of one Frobenius construction.
#[derive(Clone, Debug)]
pub struct FrobeniusJob {
    pub p: BigUint,
    pub k: u32,
    /// +1 when p ≡ 1 mod 4, else −1.
    pub epsilon: i8,
    pub exponent: FactoredInteger,
    pub retry_budget: u32,
    /// Random draws allowed for each search step.
    pub search_budget: usize,
}

impl FrobeniusJob {
    pub fn new(p: BigUint, k: u32, exponent: FactoredInteger) -> Result<Self> {
        if k <= 1 {
            return Err(Error::DegreeTooSmall(k));
        }
        if p.is_even() {
            return Err(Error::EvenCharacteristic(p));
        }
        let epsilon = if (&p % 4u32) == BigUint::one() { 1 } else { -1 };
        Ok(Self { p, k, epsilon, exponent, retry_budget: 10, search_budget: 64 * k as usize })
    }

    /// εp as the exponent of the local power maps.
    pub fn local_exponent(&self) -> BigInt {
        signed(&self.p, self.epsilon < 0)
    }
}

/// Whether the pair of centralizer tori was checked to generate the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generation {
    Unverified,
    Verified,
    /// Every retry produced a proper subgroup.
    Failed,
}

impl std::fmt::Display for Generation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Generation::Unverified => "unverified",
            Generation::Verified => "verified",
            Generation::Failed => "failed",
        })
    }
}

/// Two distinct commuting involutions.
pub fn find_klein_four(x: &mut BlackBox, e: &FactoredInteger, budget: usize) -> Result<(GroupString, GroupString)> {
    let mut draws = 0;
    while draws < budget {
        draws += 1;
        let g = x.rand();
        let Some(e1) = involution_from(x, &g, e.value()) else { continue };
        while draws < budget {
            draws += 1;
            let z = zeta_sample(x, &e1, e)?;
            if let Some(e2) = involution_from(x, &z, e.value()) {
                if !x.eq(&e2, &e1) {
                    return Ok((e1, e2));
                }
            }
        }
    }
    Err(Error::BudgetExhausted("Klein four-group search"))
}

/// ζ-images used to seed a box for the centralizer.
const CENTRALIZER_SEEDS: usize = 8;

/// A box for C(e), seeded by ζ-images of random elements.
pub fn centralizer_box(x: &mut BlackBox, e: &GroupString, exp: &FactoredInteger) -> Result<BlackBox> {
    if !is_involution(x, e) {
        return Err(Error::NotInvolution);
    }
    let mut seeds = vec![e.clone()];
    for _ in 0..CENTRALIZER_SEEDS {
        seeds.push(zeta_sample(x, e, exp)?);
    }
    x.generated_default(&seeds)
}

/// The first element of largest order among `budget` samples of C(e).
///
/// Raw ζ-images can miss the cyclic part of a dihedral centralizer entirely,
/// so samples come from a box seeded by them.
pub fn max_cyclic_generator(x: &mut BlackBox, e: &GroupString, exp: &FactoredInteger, budget: usize) -> Result<(GroupString, BigUint)> {
    let mut c_box = centralizer_box(x, e, exp)?;
    let mut best: Option<(GroupString, BigUint)> = None;
    for _ in 0..budget {
        let c = c_box.rand();
        let o = order_exact(x, &c, exp)?;
        if best.as_ref().is_none_or(|(_, b)| &o > b) {
            best = Some((c, o));
        }
    }
    match best {
        Some((c, o)) if o > BigUint::from(2u32) => Ok((c, o)),
        _ => Err(Error::BudgetExhausted("no element of order above 2 in the centralizer")),
    }
}

fn torus_pair(x: &mut BlackBox, job: &FrobeniusJob) -> Result<[GroupString; 2]> {
    let (e1, e2) = find_klein_four(x, &job.exponent, job.search_budget)?;
    let (c1, _) = max_cyclic_generator(x, &e1, &job.exponent, job.search_budget)?;
    let (c2, _) = max_cyclic_generator(x, &e2, &job.exponent, job.search_budget)?;
    Ok([c1, c2])
}

fn power_locals(tori: &[GroupString; 2], job: &FrobeniusJob) -> Vec<Local> {
    tori.iter().map(|c| Local::new(vec![c.clone()], LocalMap::Power(job.local_exponent()))).collect()
}

/// Frobenius on a box encrypting PSL₂(p^k): power maps c ↦ c^{εp} on the
/// maximal cyclic subgroups of two commuting involution centralizers.
pub fn frobenius_psl2(x: &mut BlackBox, job: &FrobeniusJob) -> Result<EnrichedBox> {
    let tori = torus_pair(x, job)?;
    amalgamate(x, &power_locals(&tori, job), job.k as usize)
}

/// As [`frobenius_psl2`], retrying with fresh involutions while `generates`
/// rejects the pair of tori. `generates` is a test-side capability.
pub fn frobenius_psl2_checked(x: &mut BlackBox, job: &FrobeniusJob, generates: &dyn Fn(&[GroupString]) -> bool) -> Result<(EnrichedBox, Generation)> {
    let mut last = None;
    for _ in 0..job.retry_budget.max(1) {
        let tori = torus_pair(x, job)?;
        let ok = generates(&tori);
        last = Some(tori);
        if ok {
            break;
        }
    }
    let tori = last.expect("at least one attempt");
    let status = if generates(&tori) { Generation::Verified } else { Generation::Failed };
    Ok((amalgamate(x, &power_locals(&tori, job), job.k as usize)?, status))
}

/// Frobenius on a box encrypting SL₂(p^k): the search runs modulo the
/// central involution, the tuples are formed in the exact group.
pub fn frobenius_sl2(x: &mut BlackBox, job: &FrobeniusJob) -> Result<EnrichedBox> {
    let mut z = None;
    for _ in 0..job.search_budget {
        let g = x.rand();
        if let Some(i) = involution_from(x, &g, job.exponent.value()) {
            z = Some(i);
            break;
        }
    }
    let z = z.ok_or(Error::BudgetExhausted("central involution search"))?;
    let mut quotient = x.modulo_central(vec![z]);
    let tori = torus_pair(&mut quotient, job)?;
    amalgamate(x, &power_locals(&tori, job), job.k as usize)
}

/// Frobenius over a datum for an untwisted group over F_{p^k}: every split
/// torus gets x ↦ x^p, every twisted torus x ↦ x^{εp}.
pub fn frobenius_rank_n(x: &BlackBox, datum: &CurtisTitsDatum, job: &FrobeniusJob) -> Result<EnrichedBox> {
    if datum.nodes.is_empty() {
        return Err(Error::InvalidDatum("rank 0".into()));
    }
    let mut locals = Vec::new();
    for node in &datum.nodes {
        locals.push(Local::new(vec![node.t_split.clone()], LocalMap::Power(BigInt::from(job.p.clone()))));
        locals.push(Local::new(vec![node.t_twisted.clone()], LocalMap::Power(job.local_exponent())));
    }
    amalgamate(x, &locals, job.k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bbcore::matrix::{bb_matrix, Matrix, MatrixGroup};
    use crate::ffield::ExplicitField;
    use crate::harness::standard::StandardSl;
    use std::sync::Arc;

    fn psl2(p: u32, k: usize, seed: u64) -> (BlackBox, Arc<MatrixGroup>, FactoredInteger) {
        let f = Arc::new(ExplicitField::standard(BigUint::from(p), k).unwrap());
        let s = StandardSl::new(f, 2, true, &[], seed).unwrap();
        let e = s.exponent.clone().unwrap();
        (s.bb, s.group, e)
    }

    #[test]
    fn job_validation() {
        let e = FactoredInteger::from_u64(24);
        assert!(matches!(FrobeniusJob::new(BigUint::from(3u32), 1, e.clone()), Err(Error::DegreeTooSmall(1))));
        assert!(matches!(FrobeniusJob::new(BigUint::from(2u32), 2, e.clone()), Err(Error::EvenCharacteristic(_))));
        assert_eq!(FrobeniusJob::new(BigUint::from(5u32), 2, e.clone()).unwrap().epsilon, 1);
        assert_eq!(FrobeniusJob::new(BigUint::from(3u32), 2, e).unwrap().epsilon, -1);
    }

    #[test]
    fn klein_four_in_psl2_9() {
        let (mut x, grp, e) = psl2(3, 2, 11);
        let (e1, e2) = find_klein_four(&mut x, &e, 200).unwrap();
        let (a, b) = (grp.decode(&e1), grp.decode(&e2));
        let f = grp.field();
        let id = Matrix::identity(f, 2);
        // squares are ±I in SL₂
        assert!(a.mul(f, &a).is_scalar() && b.mul(f, &b).is_scalar());
        assert!(a.mul(f, &a) == b.mul(f, &b) || a.mul(f, &a).scale(f, &f.from_u64(2)) == b.mul(f, &b));
        assert!(x.commute(&e1, &e2));
        assert!(!x.eq(&e1, &e2) && !x.is_identity(&e2));
        assert!(a != id);
        assert!(matches!(find_klein_four(&mut x, &e, 0), Err(Error::BudgetExhausted(_))));
    }

    #[test]
    fn odd_group_has_no_klein_four() {
        let f = Arc::new(ExplicitField::prime(BigUint::from(7u32)));
        let g = Matrix::from_u64(&f, &[&[2]]);
        let (mut x, _) = bb_matrix(f, 1, &[g], false, 3).unwrap();
        let e = FactoredInteger::from_u64(3);
        assert!(find_klein_four(&mut x, &e, 50).is_err());
    }

    #[test]
    fn centralizer_maxima() {
        let (mut x, _, e) = psl2(3, 2, 12);
        let (e1, _) = find_klein_four(&mut x, &e, 200).unwrap();
        let (c, o) = max_cyclic_generator(&mut x, &e1, &e, 128).unwrap();
        assert_eq!(o, BigUint::from(4u32));
        assert!(x.commute(&c, &e1));
        let id = x.identity();
        assert!(matches!(max_cyclic_generator(&mut x, &id, &e, 10), Err(Error::NotInvolution)));

        let (mut y, _, e13) = psl2(13, 1, 13);
        let (i, _) = find_klein_four(&mut y, &e13, 200).unwrap();
        let (_, o) = max_cyclic_generator(&mut y, &i, &e13, 128).unwrap();
        assert!(o == BigUint::from(6u32) || o == BigUint::from(7u32));
    }

    fn trace_law_holds(e: &mut EnrichedBox, grp: &MatrixGroup, p: u64, trials: usize) {
        let f = grp.field();
        for _ in 0..trials {
            let y = e.rand();
            let a = grp.decode(&e.component(&y, 0).unwrap());
            let b = grp.decode(&e.component(&y, 1).unwrap());
            let tp = f.pow_u(&a.trace(f), &BigUint::from(p));
            let tb = b.trace(f);
            assert!(tb == tp || tb == f.neg(&tp), "trace law");
            assert_eq!(e.shift_by(&y, e.k()).unwrap(), y);
        }
    }

    #[test]
    fn psl2_25_trace_law() {
        let (mut x, grp, e) = psl2(5, 2, 14);
        let job = FrobeniusJob::new(BigUint::from(5u32), 2, e).unwrap();
        let mut fr = frobenius_psl2(&mut x, &job).unwrap();
        trace_law_holds(&mut fr, &grp, 5, 300);
    }

    #[test]
    fn sl2_9_exact_trace_law() {
        let f = Arc::new(ExplicitField::standard(BigUint::from(3u32), 2).unwrap());
        let s = StandardSl::new(f.clone(), 2, false, &[], 15).unwrap();
        let (mut x, grp) = (s.bb.clone(), s.group.clone());
        let job = FrobeniusJob::new(BigUint::from(3u32), 2, s.exponent.clone().unwrap()).unwrap();
        let mut fr = frobenius_sl2(&mut x, &job).unwrap();
        for _ in 0..200 {
            let y = fr.rand();
            let a = grp.decode(&fr.component(&y, 0).unwrap());
            let b = grp.decode(&fr.component(&y, 1).unwrap());
            assert_eq!(b.trace(&f), f.pow_u(&a.trace(&f), &BigUint::from(3u32)));
        }
    }
}
