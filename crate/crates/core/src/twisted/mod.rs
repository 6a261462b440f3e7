//! Involutions made concrete, inverse-transpose maps, and SU_n(q) inside
//! SL_n(q²).

pub mod datum;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::bbcore::{BlackBox, GroupString};
use crate::cyclic::{is_involution, split_two_part, FactoredInteger};
use crate::error::{Error, Result};
use crate::morphisms::{amalgamate, EnrichedBox, Local, LocalMap};

pub use datum::{format_datum, parse_datum, CurtisTitsDatum, DatumNode};

/// Fixed points of the SU automorphism added to the torus generators.
const SU_FIXED_POINTS: usize = 4;
const FIXED_POINT_BUDGET: usize = 128;

/// An involution of a box encrypting SL₂(2ⁿ), built from two random
/// non-commuting elements of odd order.
///
/// With f = gh and u = f⁻¹g⁻¹h⁻¹: if u is an involution it is returned,
/// otherwise when u has odd order m the element f·u^{(m+1)/2} is one.
pub fn kk_involution(x: &mut BlackBox, e: &FactoredInteger, budget: usize) -> Result<GroupString> {
    let (_, m) = split_two_part(e.value())?;
    let half = (&m + 1u32) >> 1;
    for _ in 0..budget {
        let g = x.rand();
        let h = x.rand();
        for s in [&g, &h] {
            if is_involution(x, s) {
                return Ok(s.clone());
            }
        }
        let g = x.mul(&g, &g);
        let h = x.mul(&h, &h);
        if x.commute(&g, &h) {
            continue;
        }
        let f = x.mul(&g, &h);
        let u = x.mul(&x.inv(&f), &x.mul(&x.inv(&g), &x.inv(&h)));
        if is_involution(x, &u) {
            return Ok(u);
        }
        if !x.is_identity(&x.pow_u(&u, &m)) {
            continue;
        }
        let cand = x.mul(&f, &x.pow_u(&u, &half));
        if is_involution(x, &cand) {
            return Ok(cand);
        }
    }
    Err(Error::BudgetExhausted("involution search"))
}

/// The involutive automorphism that centralizes (sign +1) or inverts
/// (sign −1) each local subgroup, as an enriched box with k = 2.
pub fn reify_clean(x: &BlackBox, locals: &[(Vec<GroupString>, i8)]) -> Result<EnrichedBox> {
    let locals: Vec<Local> =
        locals.iter().map(|(gens, sign)| Local::new(gens.clone(), if *sign < 0 { LocalMap::Inversion } else { LocalMap::Identity })).collect();
    amalgamate(x, &locals, 2)
}

/// Conjugation by w_i on every K_i, amalgamated with k = 2.
pub fn inverse_transpose(x: &BlackBox, datum: &CurtisTitsDatum) -> Result<EnrichedBox> {
    if datum.nodes.is_empty() {
        return Err(Error::InvalidDatum("rank 0".into()));
    }
    let locals: Vec<Local> = datum.nodes.iter().map(|n| Local::new(n.k_gens.clone(), LocalMap::Conjugation(n.w.clone()))).collect();
    amalgamate(x, &locals, 2)
}

/// +1 when q ≡ 1 mod 4, else −1.
pub fn epsilon(q: &BigUint) -> i8 {
    if (q % 4u32) == BigUint::one() {
        1
    } else {
        -1
    }
}

/// The automorphism of SL_n(q²) whose centralizer is SU_n(q), encoded on
/// the datum tori: t ↦ t^{−q} on split tori, t ↦ t^{εq} on twisted tori.
pub fn su_automorphism(x: &BlackBox, datum: &CurtisTitsDatum, q: &BigUint) -> Result<EnrichedBox> {
    if q.is_even() {
        return Err(Error::EvenQ(q.clone()));
    }
    if datum.nodes.is_empty() {
        return Err(Error::InvalidDatum("rank 0".into()));
    }
    let qi = BigInt::from(q.clone());
    let eq = if epsilon(q) > 0 { qi.clone() } else { -qi.clone() };
    let mut locals = Vec::new();
    for n in &datum.nodes {
        locals.push(Local::new(vec![n.t_split.clone()], LocalMap::Power(-qi.clone())));
        locals.push(Local::new(vec![n.t_twisted.clone()], LocalMap::Power(eq.clone())));
    }
    amalgamate(x, &locals, 2)
}

/// A box encrypting a conjugate of SU_n(q), for X encrypting SL_n(q²).
pub fn su_subgroup(x: &BlackBox, datum: &CurtisTitsDatum, q: &BigUint) -> Result<BlackBox> {
    x.generated_default(&su_generators(x, datum, q)?)
}

/// Seeds for [`su_subgroup`]: the torus elements fixed by the automorphism
/// of [`su_automorphism`] plus a few random fixed points of it.
pub fn su_generators(x: &BlackBox, datum: &CurtisTitsDatum, q: &BigUint) -> Result<Vec<GroupString>> {
    if q.is_even() {
        return Err(Error::EvenQ(q.clone()));
    }
    datum.validate(x)?;
    let q_plus = q + 1u32;
    let q_minus = q - 1u32;
    let twisted_mod = if epsilon(q) > 0 { &q_minus } else { &q_plus };
    let mut seeds = Vec::new();
    for n in &datum.nodes {
        let o = n.split_order.value();
        seeds.push(x.pow_u(&n.t_split, &(o / o.gcd(&q_plus))));
        let o2 = n.twisted_order.value();
        seeds.push(x.pow_u(&n.t_twisted, &(o2 / o2.gcd(twisted_mod))));
    }
    let mut sigma = su_automorphism(x, datum, q)?;
    for _ in 0..SU_FIXED_POINTS {
        let h = sigma.fixed_point(FIXED_POINT_BUDGET)?;
        seeds.push(sigma.project_first(&h)?);
    }
    Ok(seeds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::ExplicitField;
    use crate::harness::standard::StandardSl;
    use std::sync::Arc;

    fn sl2_even(n: usize, seed: u64) -> (BlackBox, FactoredInteger) {
        let f = Arc::new(ExplicitField::standard(BigUint::from(2u32), n).unwrap());
        let s = StandardSl::new(f, 2, false, &[], seed).unwrap();
        let e = s.require_exponent().unwrap().clone();
        (s.bb, e)
    }

    #[test]
    fn kk_outputs_are_involutions() {
        for n in 2..=5 {
            let (mut x, e) = sl2_even(n, n as u64);
            for _ in 0..20 {
                let i = kk_involution(&mut x, &e, 32).unwrap();
                assert!(is_involution(&x, &i));
            }
        }
    }

    #[test]
    fn reify_signs() {
        let (x, _) = sl2_even(3, 1);
        let mut y = x.clone();
        let g = y.rand();
        let mut id = reify_clean(&x, &[(vec![g.clone()], 1)]).unwrap();
        for _ in 0..20 {
            let s = id.rand();
            assert_eq!(id.shift(&s).unwrap(), s);
        }
        let mut inv = reify_clean(&x, &[(vec![g], -1)]).unwrap();
        for _ in 0..20 {
            let s = inv.rand();
            let (a, b) = (inv.component(&s, 0).unwrap(), inv.component(&s, 1).unwrap());
            assert!(x.is_identity(&x.mul(&a, &b)));
        }
        assert!(matches!(reify_clean(&x, &[]), Err(Error::EmptyLocals)));
    }

    #[test]
    fn even_q_rejected() {
        let (x, _) = sl2_even(2, 1);
        let d = CurtisTitsDatum { nodes: vec![], q: BigUint::from(16u32) };
        assert!(matches!(su_subgroup(&x, &d, &BigUint::from(4u32)), Err(Error::EvenQ(_))));
        assert!(matches!(inverse_transpose(&x, &d), Err(Error::InvalidDatum(_))));
        assert_eq!(epsilon(&BigUint::from(5u32)), 1);
        assert_eq!(epsilon(&BigUint::from(7u32)), -1);
    }
}
