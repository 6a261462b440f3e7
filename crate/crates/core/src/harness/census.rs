//! Exhaustive closure of small matrix groups on index tables.

use std::collections::HashSet;

use crate::bbcore::matrix::Matrix;
use crate::error::{Error, Result};
use crate::ffield::ExplicitField;

/// Addition and multiplication tables on field element indices.
pub struct SmallField {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    bits: u32,
}

impl SmallField {
    pub fn new(f: &ExplicitField) -> Result<Self> {
        let q = f.small_order().filter(|&q| q <= 1 << 12).ok_or_else(|| Error::Unsupported("field too large for tables".into()))? as usize;
        let elems: Vec<_> = f.elements().collect();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = f.element_index(&f.add(a, b)) as u16;
                mul[i * q + j] = f.element_index(&f.mul(a, b)) as u16;
            }
        }
        let bits = usize::BITS - (q - 1).leading_zeros();
        Ok(Self { q, add, mul, bits })
    }

    fn matmul(&self, n: usize, a: &[u16], b: &[u16], out: &mut [u16]) {
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u16;
                for k in 0..n {
                    let p = self.mul[a[i * n + k] as usize * self.q + b[k * n + j] as usize];
                    s = self.add[s as usize * self.q + p as usize];
                }
                out[i * n + j] = s;
            }
        }
    }

    fn pack(&self, m: &[u16]) -> u128 {
        m.iter().fold(0u128, |acc, &x| (acc << self.bits) | x as u128)
    }
}

/// |⟨gens⟩|, modulo the given central scalars, by breadth-first search.
/// Fails once more than `limit` elements are found.
pub fn closure_size(f: &ExplicitField, gens: &[Matrix], center: &[crate::ffield::FieldElement], limit: usize) -> Result<usize> {
    let t = SmallField::new(f)?;
    let n = gens.first().map_or(1, |g| g.dim);
    if (n * n) as u32 * t.bits > 128 {
        return Err(Error::Unsupported("matrices too large to pack".into()));
    }
    let idx = |m: &Matrix| m.entries.iter().map(|e| f.element_index(e) as u16).collect::<Vec<u16>>();
    let scalars: Vec<u16> = center.iter().map(|l| f.element_index(l) as u16).collect();
    let key = |m: &[u16]| -> u128 {
        scalars.iter().map(|&l| t.pack(&m.iter().map(|&x| t.mul[l as usize * t.q + x as usize]).collect::<Vec<_>>())).min().unwrap_or_else(|| t.pack(m))
    };
    let gens: Vec<Vec<u16>> = gens.iter().map(idx).collect();
    let id = idx(&Matrix::identity(f, n));
    let mut seen = HashSet::new();
    seen.insert(key(&id));
    let mut frontier = vec![id];
    let mut buf = vec![0u16; n * n];
    while let Some(m) = frontier.pop() {
        for g in &gens {
            t.matmul(n, &m, g, &mut buf);
            if seen.insert(key(&buf)) {
                if seen.len() > limit {
                    return Err(Error::BudgetExhausted("closure limit"));
                }
                frontier.push(buf.clone());
            }
        }
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn known_orders() {
        let f5 = ExplicitField::prime(BigUint::from(5u32));
        let gens = [Matrix::from_u64(&f5, &[&[1, 1], &[0, 1]]), Matrix::from_u64(&f5, &[&[1, 0], &[1, 1]])];
        assert_eq!(closure_size(&f5, &gens, &[f5.one()], 1000).unwrap(), 120);
        assert_eq!(closure_size(&f5, &gens, &[f5.one(), f5.from_u64(4)], 1000).unwrap(), 60);
        assert!(closure_size(&f5, &gens, &[f5.one()], 50).is_err());
        let f4 = ExplicitField::standard(BigUint::from(2u32), 2).unwrap();
        let t = f4.generator();
        let (one, zero) = (f4.one(), f4.zero());
        let gens = [
            Matrix::from_rows(vec![vec![one.clone(), one.clone()], vec![zero.clone(), one.clone()]]).unwrap(),
            Matrix::from_rows(vec![vec![t.clone(), zero.clone()], vec![zero.clone(), f4.inv(&t).unwrap()]]).unwrap(),
            Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![one.clone(), one.clone()]]).unwrap(),
        ];
        assert_eq!(closure_size(&f4, &gens, &[f4.one()], 1000).unwrap(), 60);
    }
}
