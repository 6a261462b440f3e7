use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

/// p^⌈log_p n⌉ · lcm(q^i − 1 : 1 ≤ i ≤ n) for q = p^k, an exponent of GL_n(q).
pub fn global_exponent_gl(n: usize, p: &BigUint, k: u32) -> BigUint {
    let q = p.pow(k);
    let mut unipotent = BigUint::one();
    while unipotent < BigUint::from(n) {
        unipotent *= p;
    }
    let mut l = BigUint::one();
    let mut qi = BigUint::one();
    for _ in 0..n {
        qi *= &q;
        l = l.lcm(&(&qi - 1u32));
    }
    unipotent * l
}

#[cfg(test)]
mod tests {
    use super::*;

    // Oracle: lcm of element orders over all of GL_2(F_p) by enumeration.
    fn brute_exponent_gl2(p: u64) -> u64 {
        let mut l = 1u64;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d + p * p - b * c).is_multiple_of(p) {
                            continue;
                        }
                        let mut m = [a, b, c, d];
                        let mut ord = 1u64;
                        while m != [1, 0, 0, 1] {
                            m = [(m[0] * a + m[1] * c) % p, (m[0] * b + m[1] * d) % p, (m[2] * a + m[3] * c) % p, (m[2] * b + m[3] * d) % p];
                            ord += 1;
                        }
                        l = l.lcm(&ord);
                    }
                }
            }
        }
        l
    }

    #[test]
    fn small_cases() {
        assert_eq!(global_exponent_gl(2, &BigUint::from(3u32), 1), BigUint::from(24u32));
        assert_eq!(global_exponent_gl(2, &BigUint::from(2u32), 2), BigUint::from(30u32));
        assert_eq!(global_exponent_gl(1, &BigUint::from(5u32), 2), BigUint::from(24u32));
        assert_eq!(brute_exponent_gl2(3), 24);
    }

    #[test]
    fn brute_force_divides_formula() {
        for p in [2u64, 5, 7] {
            let e = global_exponent_gl(2, &BigUint::from(p), 1);
            assert_eq!(e, BigUint::from(brute_exponent_gl2(p)));
        }
    }
}
