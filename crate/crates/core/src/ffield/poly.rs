//! Dense polynomials over a prime field F_p, coefficients ascending.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub type Poly = Vec<BigUint>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn degree(a: &[BigUint]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn sub(a: &[BigUint], b: &[BigUint], p: &BigUint) -> Poly {
    let len = a.len().max(b.len());
    let zero = BigUint::zero();
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub fn mul(a: &[BigUint], b: &[BigUint], p: &BigUint) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out.into_iter().map(|c| c % p).collect())
}

fn inv_mod(a: &BigUint, p: &BigUint) -> BigUint {
    a.modpow(&(p - 2u32), p)
}

/// Remainder of `a` modulo `f`; `f` must be nonzero.
pub fn rem(a: &[BigUint], f: &[BigUint], p: &BigUint) -> Poly {
    let df = degree(f).expect("division by zero polynomial");
    let lead_inv = inv_mod(&f[df], p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < df {
            break;
        }
        let c = (&r[dr] * &lead_inv) % p;
        let shift = dr - df;
        for (i, fi) in f.iter().enumerate().take(df + 1) {
            let t = (&c * fi) % p;
            r[i + shift] = (&r[i + shift] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub fn mul_mod(a: &[BigUint], b: &[BigUint], f: &[BigUint], p: &BigUint) -> Poly {
    rem(&mul(a, b, p), f, p)
}

pub fn gcd(a: &[BigUint], b: &[BigUint], p: &BigUint) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    // normalize to monic
    if let Some(d) = degree(&x) {
        let inv = inv_mod(&x[d], p);
        x = x.into_iter().map(|c| (c * &inv) % p).collect();
    }
    x
}

/// `base^e mod f`.
pub fn pow_mod(base: &[BigUint], e: &BigUint, f: &[BigUint], p: &BigUint) -> Poly {
    let mut result: Poly = vec![BigUint::one()];
    let base = rem(base, f, p);
    for i in (0..e.bits()).rev() {
        result = mul_mod(&result, &result, f, p);
        if e.bit(i) {
            result = mul_mod(&result, &base, f, p);
        }
    }
    rem(&result, f, p)
}

pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree n is irreducible iff x^{p^n} ≡ x (mod f) and
/// gcd(x^{p^{n/r}} − x, f) = 1 for every prime r | n.
pub fn is_irreducible(f: &[BigUint], p: &BigUint) -> bool {
    let n = match degree(f) {
        Some(0) | None => return false,
        Some(d) => d,
    };
    if n == 1 {
        return true;
    }
    let x: Poly = vec![BigUint::zero(), BigUint::one()];
    let frob_iter = |k: usize| -> Poly {
        let e = p.pow(k as u32);
        pow_mod(&x, &e, f, p)
    };
    let full = frob_iter(n);
    if sub(&full, &x, p) != Vec::<BigUint>::new() {
        return false;
    }
    for r in prime_divisors(n) {
        let h = sub(&frob_iter(n / r), &x, p);
        let g = gcd(&h, f, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Smallest monic irreducible of degree n in the enumeration where the
/// low coefficients are the base-min(p,16) digits of a counter.
pub fn find_irreducible(p: &BigUint, n: usize) -> Poly {
    let base: u64 = if p < &BigUint::from(16u32) { p.iter_u64_digits().next().unwrap_or(0) } else { 16 };
    let mut m: u64 = 0;
    loop {
        let mut f = vec![BigUint::zero(); n + 1];
        f[n] = BigUint::one();
        let mut t = m;
        for c in f.iter_mut().take(n) {
            *c = BigUint::from(t % base);
            t /= base;
        }
        // irreducibles of every degree exist, so the scan terminates before t overflows
        if t == 0 && is_irreducible(&f, p) {
            return f;
        }
        m += 1;
    }
}
