//! White-box verifiers for constructed morphisms and automorphisms.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::report::Report;
use super::whitebox::WhiteBox;
use crate::bbcore::matrix::Matrix;
use crate::error::Result;
use crate::ffield::FieldElement;
use crate::morphisms::{EnrichedBox, Morphism};

/// Which map the trace verifiers test: the enriched shift, or the identity
/// as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftUnderTest {
    Enriched,
    Identity,
}

/// Builds the partial map π_X(x) ↦ π_Y(y) from graph samples and checks it
/// is a function and multiplicative on consecutive sample pairs.
pub fn verify_homomorphism(m: &mut Morphism, wx: &WhiteBox, wy: &WhiteBox, trials: usize) -> Result<Report> {
    let mut report = Report::new("homomorphism", m.graph.seed());
    let mut map: HashMap<Vec<u8>, Vec<u8>> = HashMap::new();
    let mut samples = Vec::with_capacity(trials);
    for _ in 0..trials {
        let (x, y) = m.sample();
        let (a, b) = (wx.project(&x)?, wy.project(&y)?);
        let (ka, kb) = (wx.key(&a), wy.key(&b));
        let ok = map.get(&ka).is_none_or(|prev| prev == &kb);
        report.check(ok, || format!("{x}->{y}"));
        map.entry(ka).or_insert(kb);
        samples.push((a, b));
    }
    for pair in samples.windows(2) {
        let (a1, b1) = &pair[0];
        let (a2, b2) = &pair[1];
        let ka = wx.key(&a1.mul(wx.field(), a2));
        if let Some(img) = map.get(&ka) {
            if img != &wy.key(&b1.mul(wy.field(), b2)) {
                report.fail(format!("product {}", wx.encode(&a1.mul(wx.field(), a2))));
            }
        }
    }
    report.set_param("domain_size", map.len());
    Ok(report)
}

fn trace_law(
    name: &str,
    e: &mut EnrichedBox,
    w: &WhiteBox,
    trials: usize,
    mode: ShiftUnderTest,
    expected: impl Fn(&Matrix) -> Result<FieldElement>,
) -> Result<Report> {
    let mut report = Report::new(name, e.bundled().seed()).param("k", e.k());
    if mode == ShiftUnderTest::Identity {
        report.set_param("control", "identity-shift");
    }
    let f = w.field();
    for _ in 0..trials {
        let y = e.rand();
        let s = match mode {
            ShiftUnderTest::Enriched => e.shift(&y)?,
            ShiftUnderTest::Identity => y.clone(),
        };
        let mut ok = true;
        for j in 0..e.k() {
            let a = w.project(&e.component(&y, j)?)?;
            let b = w.project(&e.component(&s, j)?)?;
            ok &= w.same_up_to_center(&b.trace(f), &expected(&a)?);
        }
        if mode == ShiftUnderTest::Enriched {
            ok &= e.shift_by(&y, e.k())? == y;
        }
        report.check(ok, || y.to_hex());
    }
    Ok(report)
}

/// tr(π(shift(y))) = tr(π(y))^p, up to the center on quotient backends.
pub fn verify_frobenius(e: &mut EnrichedBox, w: &WhiteBox, p: &BigUint, trials: usize) -> Result<Report> {
    verify_frobenius_against(e, w, p, trials, ShiftUnderTest::Enriched)
}

pub fn verify_frobenius_against(e: &mut EnrichedBox, w: &WhiteBox, p: &BigUint, trials: usize, mode: ShiftUnderTest) -> Result<Report> {
    let f = w.field().clone();
    let mut r = trace_law("frobenius", e, w, trials, mode, |a| Ok(f.pow_u(&a.trace(&f), p)))?;
    r.set_param("p", p);
    // over the prime field the law reads tr = tr
    r.set_param("vacuous", f.degree() == 1);
    Ok(r)
}

/// tr(π(shift(y))) = tr(π(y)⁻¹), up to the center on quotient backends.
pub fn verify_inverse_transpose(e: &mut EnrichedBox, w: &WhiteBox, trials: usize) -> Result<Report> {
    verify_inverse_transpose_against(e, w, trials, ShiftUnderTest::Enriched)
}

pub fn verify_inverse_transpose_against(e: &mut EnrichedBox, w: &WhiteBox, trials: usize, mode: ShiftUnderTest) -> Result<Report> {
    let f = w.field().clone();
    trace_law("inverse-transpose", e, w, trials, mode, |a| Ok(a.inverse(&f)?.trace(&f)))
}

/// π(y_{j+1}) = φ(π(y_j)) for a known map φ on matrices.
pub fn verify_enrichment_map(e: &mut EnrichedBox, w: &WhiteBox, phi: impl Fn(&Matrix) -> Matrix, trials: usize) -> Result<Report> {
    let mut report = Report::new("enrichment", e.bundled().seed()).param("k", e.k());
    for _ in 0..trials {
        let y = e.rand();
        let mut ok = e.shift_by(&y, e.k())? == y;
        for j in 0..e.k() {
            let a = w.project(&e.component(&y, j)?)?;
            let b = w.project(&e.component(&y, (j + 1) % e.k())?)?;
            ok &= w.key(&b) == w.key(&phi(&a));
        }
        report.check(ok, || y.to_hex());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bbcore::GroupString;
    use crate::ffield::ExplicitField;
    use crate::harness::standard::StandardSl;
    use crate::morphisms::{amalgamate, morphism_from_pairs, Local, LocalMap};
    use std::sync::Arc;

    fn sl(p: u32, k: usize, n: usize, seed: u64) -> StandardSl {
        StandardSl::new(Arc::new(ExplicitField::standard(BigUint::from(p), k).unwrap()), n, false, &[], seed).unwrap()
    }

    #[test]
    fn identity_morphism_and_corrupted_control() {
        let s = sl(5, 1, 2, 1);
        let w = WhiteBox::new(s.group.clone());
        let gens: Vec<GroupString> = crate::harness::standard::sl_generators(&s.field, 2, &s.omega).unwrap().iter().map(|m| s.group.encode(m)).collect();
        let pairs: Vec<_> = gens.iter().map(|g| (g.clone(), g.clone())).collect();
        let mut id = morphism_from_pairs(&s.bb, &s.bb, &pairs).unwrap();
        let r = verify_homomorphism(&mut id, &w, &w, 2000).unwrap();
        assert_eq!(r.failures, 0, "{r}");
        let mut bad = pairs.clone();
        bad[0].1 = gens[1].clone();
        let mut corrupted = morphism_from_pairs(&s.bb, &s.bb, &bad).unwrap();
        let r = verify_homomorphism(&mut corrupted, &w, &w, 2000).unwrap();
        assert!(r.failures > 0);
    }

    #[test]
    fn entrywise_frobenius_passes_and_identity_control_fails() {
        let s = sl(3, 2, 2, 2);
        let w = WhiteBox::new(s.group.clone());
        let f = s.field.clone();
        let frob = {
            let f = f.clone();
            move |m: &Matrix| m.map(|a| f.frobenius(a, 1))
        };
        let gens = crate::harness::standard::sl_generators(&f, 2, &s.omega).unwrap();
        let ev = {
            let (g, frob) = (s.group.clone(), frob.clone());
            Arc::new(move |x: &GroupString| Ok(g.encode(&frob(&g.decode(x)))))
        };
        let locals = vec![Local::new(gens.iter().map(|m| s.group.encode(m)).collect(), LocalMap::Custom(ev))];
        let mut e = amalgamate(&s.bb, &locals, 2).unwrap();
        let p = BigUint::from(3u32);
        let r = verify_frobenius(&mut e, &w, &p, 300).unwrap();
        assert_eq!(r.failures, 0);
        assert_eq!(r.get_param("vacuous"), Some("false"));
        assert!(verify_frobenius_against(&mut e, &w, &p, 300, ShiftUnderTest::Identity).unwrap().failures > 0);
        assert_eq!(verify_enrichment_map(&mut e, &w, &frob, 300).unwrap().failures, 0);
        assert!(verify_enrichment_map(&mut e, &w, |m: &Matrix| m.clone(), 300).unwrap().failures > 0);
    }
}
