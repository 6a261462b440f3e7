//! Constructions run against white-box oracles built in the test itself.

use std::sync::Arc;

use num_bigint::BigUint;

use bbgroup::bbcore::matrix::Matrix;
use bbgroup::error::Error;
use bbgroup::ffield::ExplicitField;
use bbgroup::harness::census::closure_size;
use bbgroup::harness::experiments::{self, su_order, SuOptions};
use bbgroup::harness::standard::StandardSl;
use bbgroup::harness::WhiteBox;
use bbgroup::twisted::{format_datum, inverse_transpose, parse_datum, su_generators};

fn sl(p: u32, k: usize, n: usize, seed: u64) -> StandardSl {
    StandardSl::new(Arc::new(ExplicitField::standard(BigUint::from(p), k).unwrap()), n, false, &[], seed).unwrap()
}

#[test]
fn standard_generators_generate() {
    // oracle: BFS closure against the textbook orders
    for (p, k, n, order) in [(5u32, 1usize, 2usize, 120usize), (3, 2, 2, 720), (2, 2, 2, 60), (3, 1, 3, 5616)] {
        let s = sl(p, k, n, 1);
        let gens: Vec<Matrix> =
            vec![s.group.decode(&s.bb.identity())].into_iter().chain(bbgroup::harness::standard::sl_generators(&s.field, n, &s.omega).unwrap()).collect();
        let f = s.field.as_ref();
        assert_eq!(closure_size(f, &gens, &[f.one()], 1_000_000).unwrap(), order, "SL{n}({p}^{k})");
    }
}

#[test]
fn datum_survives_text_round_trip() {
    let s = sl(7, 1, 4, 2);
    let d = s.datum(2).unwrap();
    let back = parse_datum(&format_datum(&d)).unwrap();
    assert_eq!(back, d);
    back.validate(&s.bb).unwrap();
}

#[test]
fn inverse_transpose_on_sl4() {
    let s = sl(5, 1, 4, 3);
    let d = s.datum(3).unwrap();
    let mut e = inverse_transpose(&s.bb, &d).unwrap();
    let w = WhiteBox::new(s.group.clone());
    let f = s.field.clone();
    for _ in 0..200 {
        let y = e.rand();
        let a = w.project(&e.component(&y, 0).unwrap()).unwrap();
        let img = w.project(&e.component(&e.shift(&y).unwrap(), 0).unwrap()).unwrap();
        // conjugate of the inverse transpose: same characteristic data as a⁻¹
        assert_eq!(img.trace(&f), a.inverse(&f).unwrap().trace(&f));
        assert_eq!(img.det(&f), f.one());
    }
}

#[test]
fn su3_of_7_census() {
    let opts = SuOptions { p: BigUint::from(7u32), k: 1, n: 3, hints: vec![], samples: 100, census: false, exponent_check: true };
    let r = experiments::su_embed(&opts, 4).unwrap();
    assert_eq!(r.failures, 0, "{r}");
    assert_eq!(r.get_param("form"), Some("found"));
    // |SU3(7)| = 7³·(7²−1)·(7³+1)
    assert_eq!(su_order(3, &BigUint::from(7u32)), BigUint::from(343u32 * 48 * 344));
}

#[test]
fn su_generators_reject_even_q() {
    let s = sl(3, 2, 3, 1);
    let d = s.datum(1).unwrap();
    assert!(matches!(su_generators(&s.bb, &d, &BigUint::from(4u32)), Err(Error::EvenQ(_))));
}

#[test]
fn frobenius_on_sl3_over_f9() {
    let r = experiments::frobenius_rank(3, 2, 3, 300, 5).unwrap();
    assert_eq!(r[0].failures, 0, "{}", r[0]);
    assert!(r[1].failures > 0, "identity control must fail: {}", r[1]);
}

#[test]
fn sl2_frobenius_exact() {
    let r = experiments::frobenius("sl2", 3, 2, 300, 6).unwrap();
    assert_eq!(r[0].failures, 0, "{}", r[0]);
}
