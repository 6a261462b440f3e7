//! Gaussian elimination over an [`ExplicitField`].

use super::{ExplicitField, FieldElement};

/// Row-echelon accumulator: rows are added one at a time and reduced against
/// the pivots seen so far, so large homogeneous systems can be streamed.
#[derive(Clone, Debug)]
pub struct Eliminator<'a> {
    field: &'a ExplicitField,
    ncols: usize,
    /// Reduced rows with a unit at `pivots[i]`.
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl<'a> Eliminator<'a> {
    pub fn new(field: &'a ExplicitField, ncols: usize) -> Self {
        Self { field, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rows.len()
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn push(&mut self, mut row: Vec<FieldElement>) -> bool {
        assert_eq!(row.len(), self.ncols, "row width");
        let f = self.field;
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            if row[pc].is_zero() {
                continue;
            }
            let c = row[pc].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&row[pc]).expect("nonzero pivot");
        for x in row.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // keep earlier rows reduced in the new pivot column
        for r in self.rows.iter_mut() {
            if r[pc].is_zero() {
                continue;
            }
            let c = r[pc].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(pc);
        true
    }

    /// A basis of the solution space of the homogeneous system.
    pub fn null_space(&self) -> Vec<Vec<FieldElement>> {
        let f = self.field;
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.ncols];
                v[fc] = f.one();
                for (r, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = f.neg(&r[fc]);
                }
                v
            })
            .collect()
    }
}

pub fn null_space(field: &ExplicitField, rows: &[Vec<FieldElement>], ncols: usize) -> Vec<Vec<FieldElement>> {
    let mut e = Eliminator::new(field, ncols);
    for r in rows {
        e.push(r.clone());
    }
    e.null_space()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn fp(p: u32) -> ExplicitField {
        ExplicitField::prime(BigUint::from(p))
    }

    fn row(f: &ExplicitField, v: &[u64]) -> Vec<FieldElement> {
        v.iter().map(|&x| f.from_u64(x)).collect()
    }

    #[test]
    fn kernel_vectors_solve_the_system() {
        let f = fp(7);
        let rows = vec![row(&f, &[1, 2, 3, 4]), row(&f, &[0, 1, 1, 2]), row(&f, &[1, 3, 4, 6])];
        let ker = null_space(&f, &rows, 4);
        // row3 = row1 + row2, so nullity 2
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in &rows {
                let dot = r.iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn dependent_rows_do_not_raise_rank() {
        let f = fp(5);
        let mut e = Eliminator::new(&f, 3);
        assert!(e.push(row(&f, &[1, 1, 0])));
        assert!(!e.push(row(&f, &[2, 2, 0])));
        assert!(e.push(row(&f, &[0, 1, 1])));
        assert_eq!(e.nullity(), 1);
    }
}
