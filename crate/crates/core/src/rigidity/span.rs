//! Dimension of the unital algebra generated by a tuple. By Burnside's
//! theorem the tuple acts irreducibly iff this equals `n²`.

use super::MatrixTuple;
use crate::exact::{ExactMatrix, GaussianRational};

/// Incrementally reduced set of vectors; each stored vector has a pivot
/// entry equal to 1 that is zero in all the others.
struct Echelon {
    rows: Vec<(usize, Vec<GaussianRational>)>,
}

impl Echelon {
    /// Reduces `v` and keeps it if independent.
    fn insert(&mut self, mut v: Vec<GaussianRational>) -> bool {
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &(&c * y);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, r) in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(&v) {
                    *x -= &(&c * y);
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

fn flatten(m: &ExactMatrix) -> Vec<GaussianRational> {
    m.to_rows().into_iter().flatten().collect()
}

/// Closes `span{I}` under right multiplication by the generators.
pub fn algebra_span_dimension(t: &MatrixTuple) -> usize {
    let n = t.n();
    let mut echelon = Echelon { rows: Vec::new() };
    let id = ExactMatrix::identity(n);
    echelon.insert(flatten(&id));
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in t.matrices() {
            let y = x.try_mul(g).expect("square");
            if echelon.insert(flatten(&y)) {
                queue.push(y);
            }
        }
    }
    echelon.rows.len()
}
