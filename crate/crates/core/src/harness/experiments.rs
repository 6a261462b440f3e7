//! Seeded experiment runners shared by the command line and the acceptance
//! suite. Each returns one or more [`Report`]s.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::census::closure_size;
use super::hermitian::{find_hermitian_form, HermitianOutcome};
use super::primality::miller_rabin;
use super::report::Report;
use super::standard::StandardSl;
use super::verify::{verify_frobenius, verify_frobenius_against, verify_inverse_transpose, verify_inverse_transpose_against, ShiftUnderTest};
use super::whitebox::WhiteBox;
use crate::bbcore::matrix::Matrix;
use crate::bbcore::GroupString;
use crate::cyclic::FactoredInteger;
use crate::error::{Error, Result};
use crate::ffield::ExplicitField;
use crate::frobenius::{frobenius_psl2_checked, frobenius_rank_n, frobenius_sl2, FrobeniusJob, Generation};
use crate::twisted::{inverse_transpose, kk_involution, su_generators};

/// Closure searches stop beyond this many elements.
pub const CENSUS_LIMIT: usize = 2_000_000;

fn finish(mut r: Report, start: Instant) -> Report {
    r.wall_time_ms = start.elapsed().as_millis() as u64;
    r
}

fn is_prime_power(q: u64) -> Option<(u64, usize)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// F_q from a prime power q.
pub fn field_of_order(q: u64) -> Result<Arc<ExplicitField>> {
    let (p, k) = is_prime_power(q).filter(|_| q > 1).ok_or_else(|| Error::NotAField(format!("{q} is not a prime power")))?;
    Ok(Arc::new(ExplicitField::standard(BigUint::from(p), k)?))
}

/// Frobenius is additive and multiplicative on random pairs.
pub fn ff_check(p: &BigUint, n: usize, trials: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let f = ExplicitField::standard(p.clone(), n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new("ff-check", seed).param("p", p).param("n", n);
    for _ in 0..trials {
        let (a, b) = (f.random(&mut rng), f.random(&mut rng));
        let fr = |x: &crate::ffield::FieldElement| f.frobenius(x, 1);
        let ok = fr(&f.add(&a, &b)) == f.add(&fr(&a), &fr(&b)) && fr(&f.mul(&a, &b)) == f.mul(&fr(&a), &fr(&b));
        r.check(ok, || format!("{a}|{b}"));
    }
    Ok(finish(r, start))
}

/// Involutions of SL₂(q), q even, each checked white-box.
pub fn involution(q: u64, trials: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    if !q.is_multiple_of(2) {
        return Err(Error::Unsupported(format!("involution construction needs even q, got {q}")));
    }
    let s = StandardSl::new(field_of_order(q)?, 2, false, &[], seed)?;
    let e = s.require_exponent()?.clone();
    let w = WhiteBox::new(s.group.clone());
    let f = s.field.clone();
    let id = Matrix::identity(&f, 2);
    let mut r = Report::new("involution", seed).param("q", q);
    for t in 0..trials {
        let mut bb = s.bb.clone();
        bb.reseed(seed.wrapping_add(t as u64));
        match kk_involution(&mut bb, &e, 64) {
            Ok(i) => {
                let m = w.project(&i)?;
                r.check(m != id && m.mul(&f, &m) == id, || i.to_hex());
            }
            Err(err) => r.check(false, || err.to_string()),
        }
    }
    Ok(finish(r, start))
}

/// |PSL₂(q)| for odd q.
fn psl2_order(q: u64) -> usize {
    (q * (q * q - 1) / 2) as usize
}

/// Frobenius on PSL₂(p^k) or SL₂(p^k) with the trace-law verifier and its
/// identity-shift control.
pub fn frobenius(group: &str, p: u64, k: usize, trials: usize, seed: u64) -> Result<Vec<Report>> {
    frobenius_with_budget(group, p, k, trials, None, seed)
}

/// [`frobenius`] with an explicit per-step search budget.
pub fn frobenius_with_budget(group: &str, p: u64, k: usize, trials: usize, budget: Option<usize>, seed: u64) -> Result<Vec<Report>> {
    let start = Instant::now();
    let quotient = match group {
        "psl2" => true,
        "sl2" => false,
        other => return Err(Error::Unsupported(format!("group {other:?}"))),
    };
    let f = Arc::new(ExplicitField::standard(BigUint::from(p), k)?);
    let q = u64::try_from(f.order()).map_err(|_| Error::Unsupported("field too large".into()))?;
    let s = StandardSl::new(f.clone(), 2, quotient, &[], seed)?;
    let mut job = FrobeniusJob::new(BigUint::from(p), k as u32, s.require_exponent()?.clone())?;
    if let Some(b) = budget {
        job.search_budget = b;
    }
    let w = WhiteBox::new(s.group.clone());
    let mut x = s.bb.clone();
    let (mut e, status) = if quotient {
        let group = s.group.clone();
        let generates = move |tori: &[GroupString]| {
            let gens: Vec<Matrix> = tori.iter().map(|t| group.decode(t)).collect();
            matches!(closure_size(group.field(), &gens, group.center(), CENSUS_LIMIT), Ok(n) if n == psl2_order(q))
        };
        frobenius_psl2_checked(&mut x, &job, &generates)?
    } else {
        (frobenius_sl2(&mut x, &job)?, Generation::Unverified)
    };
    let pb = BigUint::from(p);
    let mut law = verify_frobenius(&mut e, &w, &pb, trials)?;
    law.seed = seed;
    law.set_param("group", group);
    law.set_param("q", q);
    law.set_param("generation", status);
    let mut control = verify_frobenius_against(&mut e, &w, &pb, trials, ShiftUnderTest::Identity)?;
    control.seed = seed;
    control.set_param("group", group);
    control.set_param("q", q);
    let elapsed = start.elapsed().as_millis() as u64;
    law.wall_time_ms = elapsed;
    control.wall_time_ms = elapsed;
    Ok(vec![law, control])
}

/// Frobenius on SL_n(p^k) amalgamated over the standard datum.
pub fn frobenius_rank(p: u64, k: usize, n: usize, trials: usize, seed: u64) -> Result<Vec<Report>> {
    let start = Instant::now();
    let f = Arc::new(ExplicitField::standard(BigUint::from(p), k)?);
    let s = StandardSl::new(f, n, false, &[], seed)?;
    let datum = s.datum(seed)?;
    datum.validate(&s.bb)?;
    let exponent = s.require_exponent()?.clone();
    let job = FrobeniusJob::new(BigUint::from(p), k as u32, exponent)?;
    let w = WhiteBox::new(s.group.clone());
    let mut e = frobenius_rank_n(&s.bb, &datum, &job)?;
    let pb = BigUint::from(p);
    let mut law = verify_frobenius(&mut e, &w, &pb, trials)?;
    let mut control = verify_frobenius_against(&mut e, &w, &pb, trials, ShiftUnderTest::Identity)?;
    let elapsed = start.elapsed().as_millis() as u64;
    for r in [&mut law, &mut control] {
        r.seed = seed;
        r.set_param("group", "sl");
        r.set_param("n", n);
        r.set_param("q", s.q());
        r.wall_time_ms = elapsed;
    }
    Ok(vec![law, control])
}

/// Inverse-transpose on SL_n(q) with its identity-shift control.
pub fn invtrans(q: u64, n: usize, trials: usize, seed: u64) -> Result<Vec<Report>> {
    let start = Instant::now();
    let s = StandardSl::new(field_of_order(q)?, n, false, &[], seed)?;
    let datum = s.datum(seed)?;
    datum.validate(&s.bb)?;
    let w = WhiteBox::new(s.group.clone());
    let mut e = inverse_transpose(&s.bb, &datum)?;
    let mut law = verify_inverse_transpose(&mut e, &w, trials)?;
    let mut control = verify_inverse_transpose_against(&mut e, &w, trials, ShiftUnderTest::Identity)?;
    let elapsed = start.elapsed().as_millis() as u64;
    for r in [&mut law, &mut control] {
        r.seed = seed;
        r.set_param("q", q);
        r.set_param("n", n);
        r.wall_time_ms = elapsed;
    }
    Ok(vec![law, control])
}

/// |SU_n(q)| = q^{n(n−1)/2} · Π_{i=2..n} (q^i − (−1)^i).
pub fn su_order(n: u32, q: &BigUint) -> BigUint {
    let mut o = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        let qi = q.pow(i);
        o *= if i % 2 == 0 { qi - 1u32 } else { qi + 1u32 };
    }
    o
}

/// Exponent of GU_n(q): p^a · lcm(q^i − (−1)^i) with p^a ≥ n.
pub fn su_exponent(n: u32, p: &BigUint, q: &BigUint) -> BigUint {
    use num_integer::Integer;
    let mut e = BigUint::one();
    for i in 1..=n {
        let qi = q.pow(i);
        e = e.lcm(&if i % 2 == 0 { qi - 1u32 } else { qi + 1u32 });
    }
    let mut pa = p.clone();
    while pa < BigUint::from(n) {
        pa *= p;
    }
    e * pa
}

/// Options for [`su_embed`].
#[derive(Clone, Debug)]
pub struct SuOptions {
    pub p: BigUint,
    /// q = p^k.
    pub k: usize,
    pub n: usize,
    /// Primes of q² − 1 beyond trial division.
    pub hints: Vec<BigUint>,
    pub samples: usize,
    /// Also enumerate the closure of the generators (small q only).
    pub census: bool,
    /// Also raise every sample to the SU exponent.
    pub exponent_check: bool,
}

/// SU_n(q) inside SL_n(q²): Hermitian-form certificate on fresh samples,
/// and optionally the closure order and exponent law.
pub fn su_embed(opts: &SuOptions, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let q = opts.p.pow(opts.k as u32);
    let f = Arc::new(ExplicitField::standard(opts.p.clone(), 2 * opts.k)?);
    let s = StandardSl::new(f.clone(), opts.n, false, &opts.hints, seed)?;
    let datum = s.datum(seed)?;
    let gens = su_generators(&s.bb, &datum, &q)?;
    let mut su = s.bb.generated_default(&gens)?;
    let w = WhiteBox::new(s.group.clone());
    let mut r = Report::new("su-embed", seed).param("q", &q).param("n", opts.n).param("samples", opts.samples);
    let mut samples = Vec::with_capacity(opts.samples);
    for _ in 0..opts.samples {
        samples.push(w.project(&su.rand())?);
    }
    let form = find_hermitian_form(&f, &samples, &q)?;
    r.set_param(
        "form",
        match &form {
            HermitianOutcome::Found(_) => "found".to_string(),
            HermitianOutcome::None => "none".to_string(),
            HermitianOutcome::Inconclusive(d) => format!("inconclusive-{d}"),
        },
    );
    r.check(matches!(form, HermitianOutcome::Found(_)), || "no nondegenerate Hermitian form".into());
    if opts.exponent_check {
        let e = su_exponent(opts.n as u32, &opts.p, &q);
        let id = Matrix::identity(&f, opts.n);
        for m in &samples {
            r.check(m.pow(&f, &e) == id, || w.encode(m).to_hex());
        }
    }
    if opts.census {
        let mats: Vec<Matrix> = gens.iter().map(|g| w.project(g)).collect::<Result<_>>()?;
        let size = closure_size(&f, &mats, &[f.one()], CENSUS_LIMIT)?;
        let expected = su_order(opts.n as u32, &q);
        r.set_param("closure", size);
        r.check(BigUint::from(size) == expected, || format!("closure {size} != {expected}"));
    }
    Ok(finish(r, start))
}

/// Miller–Rabin on n.
pub fn mr(n: &BigUint, rounds: u32, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let v = miller_rabin(n, rounds, seed)?;
    let r = Report::new("mr", seed).param("n", n).param("rounds", rounds).param("verdict", v);
    Ok(finish(r, start))
}

/// The 60-digit prime used in the large SU smoke test, with the primes of p ± 1.
pub fn large_prime() -> (BigUint, Vec<BigUint>) {
    let p = "622288097498926496141095869268883999563096063592498055290461".parse().expect("literal");
    let hints = ["570300372023", "41062172279", "176970255507089899085755393169", "251941", "7549434103241", "163586797794002197521332331922373494513451"]
        .iter()
        .map(|s| s.parse().expect("literal"))
        .collect();
    (p, hints)
}

/// Exact factorization of p − 1 for the large prime, as a self-check.
pub fn large_prime_factorization() -> Result<(FactoredInteger, FactoredInteger)> {
    let (p, hints) = large_prime();
    Ok((FactoredInteger::with_hints(&p - 1u32, &hints)?, FactoredInteger::with_hints(&p + 1u32, &hints)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_fields() {
        assert_eq!(su_order(3, &BigUint::from(5u32)), BigUint::from(378000u32));
        assert_eq!(su_order(2, &BigUint::from(5u32)), BigUint::from(120u32));
        assert!(field_of_order(12).is_err());
        assert_eq!(field_of_order(27).unwrap().degree(), 3);
        assert_eq!(psl2_order(9), 360);
        let (a, b) = large_prime_factorization().unwrap();
        assert_eq!(a.factors().len(), 9);
        assert_eq!(b.factors().len(), 4);
    }

    #[test]
    fn small_runs() {
        assert!(ff_check(&BigUint::from(3u32), 3, 100, 1).unwrap().passed());
        assert!(involution(8, 20, 2).unwrap().passed());
        let v = mr(&BigUint::from(561u32), 20, 3).unwrap();
        assert_eq!(v.get_param("verdict"), Some("composite"));
        let it = invtrans(5, 3, 100, 4).unwrap();
        assert!(it[0].passed() && !it[1].passed());
        let fr = frobenius_rank(3, 2, 3, 100, 5).unwrap();
        assert!(fr[0].passed() && !fr[1].passed(), "{}", fr[0]);
    }
}
