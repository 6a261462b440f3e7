//! Solving for a Hermitian form preserved by a set of matrices over F_{q²}.

use num_bigint::BigUint;

use crate::bbcore::matrix::Matrix;
use crate::error::{Error, Result};
use crate::ffield::linalg::Eliminator;
use crate::ffield::{ExplicitField, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HermitianOutcome {
    /// A nondegenerate J with J̄ᵀ = J and M̄ᵀJM = J for every sample.
    Found(Matrix),
    /// Only the zero form, or no nondegenerate Hermitian one.
    None,
    /// The invariant forms span this many dimensions.
    Inconclusive(usize),
}

/// Exponent j with q = p^j, requiring the field to be F_{q²}.
fn half_degree(f: &ExplicitField, q: &BigUint) -> Result<usize> {
    let d = f.degree();
    if !d.is_multiple_of(2) || &f.characteristic().pow((d / 2) as u32) != q {
        return Err(Error::Unsupported(format!("field of order {} is not F_{{{q}²}}", f.order())));
    }
    Ok(d / 2)
}

fn conj_transpose(f: &ExplicitField, m: &Matrix, j: usize) -> Matrix {
    m.transpose().map(|a| f.frobenius(a, j))
}

/// Solves M̄ᵀJM = J over all samples, with bar the q-power map.
pub fn find_hermitian_form(f: &ExplicitField, samples: &[Matrix], q: &BigUint) -> Result<HermitianOutcome> {
    let j = half_degree(f, q)?;
    let n = samples.first().map_or(0, |m| m.dim);
    let mut elim = Eliminator::new(f, n * n);
    for m in samples {
        let bar = m.map(|a| f.frobenius(a, j));
        // (M̄ᵀJM)_{ab} = Σ_{c,d} M̄_{ca} J_{cd} M_{db}
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![f.zero(); n * n];
                for c in 0..n {
                    for d in 0..n {
                        row[c * n + d] = f.mul(bar.get(c, a), m.get(d, b));
                    }
                }
                let idx = a * n + b;
                row[idx] = f.sub(&row[idx], &f.one());
                elim.push(row);
            }
        }
        if elim.nullity() == 0 {
            break;
        }
    }
    let basis = elim.null_space();
    match basis.len() {
        0 => Ok(HermitianOutcome::None),
        1 => Ok(hermitianize(f, &basis[0], n, j)),
        k => Ok(HermitianOutcome::Inconclusive(k)),
    }
}

/// ξJ + (ξJ)‾ᵀ for a few ξ; the first nondegenerate result wins.
fn hermitianize(f: &ExplicitField, v: &[FieldElement], n: usize, j: usize) -> HermitianOutcome {
    let jm = Matrix { dim: n, entries: v.to_vec() };
    let mut candidates = vec![f.one(), f.generator()];
    candidates.push(f.add(&f.one(), &f.generator()));
    for xi in candidates {
        let a = jm.scale(f, &xi);
        let h = conj_transpose(f, &a, j);
        let sum = Matrix { dim: n, entries: a.entries.iter().zip(&h.entries).map(|(x, y)| f.add(x, y)).collect() };
        if !sum.det(f).is_zero() {
            return HermitianOutcome::Found(sum);
        }
    }
    HermitianOutcome::None
}

/// Checks J̄ᵀ = J and M̄ᵀJM = J.
pub fn preserves(f: &ExplicitField, jm: &Matrix, m: &Matrix, q: &BigUint) -> Result<bool> {
    let j = half_degree(f, q)?;
    Ok(&conj_transpose(f, jm, j) == jm && conj_transpose(f, m, j).mul(f, jm).mul(f, m) == *jm)
}
