//! Exact rational linear algebra: a sparse incremental echelon form (used by
//! the jet oracle and brute-force test oracles) and a small dense kernel
//! solver (used by the weight search).

use num::rational::BigRational;
use num::Zero;
use std::collections::BTreeMap;

/// A sparse vector: sorted coordinate/value pairs, zero values omitted.
pub type SparseVec = Vec<(usize, BigRational)>;

/// Incremental echelon form over Q. Rows are reduced against pivots as they
/// are inserted; each pivot is the smallest nonzero coordinate of its row.
#[derive(Debug, Default)]
pub struct Echelon {
    // pivot coordinate -> row (normalized so pivot coefficient is 1)
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, coord: usize) -> bool {
        self.rows.contains_key(&coord)
    }

    /// Reduces `v` against the current rows; the remainder has no pivot
    /// coordinates. Returns the reduced vector.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some(&(lead, ref c)) = v.first() else { return v };
            let Some(row) = self.rows.get(&lead) else { return v };
            let factor = c.clone();
            v = sub_scaled(&v, row, &factor);
        }
    }

    /// Inserts a vector; returns the new pivot coordinate, or None if the
    /// vector reduced to zero (i.e. it was already in the span).
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let v = self.reduce(v);
        let (lead, c) = v.first()?.clone();
        let inv = BigRational::new(c.denom().clone(), c.numer().clone());
        let norm: SparseVec = v.into_iter().map(|(i, x)| (i, x * &inv)).collect();
        self.rows.insert(lead, norm);
        Some(lead)
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// a - factor * b for sorted sparse vectors.
fn sub_scaled(a: &SparseVec, b: &SparseVec, factor: &BigRational) -> SparseVec {
    let mut out = SparseVec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, ca)), Some((jb, cb))) => {
                if ia < jb {
                    out.push((*ia, ca.clone()));
                    i += 1;
                } else if jb < ia {
                    out.push((*jb, -(cb * factor)));
                    j += 1;
                } else {
                    let c = ca - cb * factor;
                    if !c.is_zero() {
                        out.push((*ia, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ia, ca)), None) => {
                out.push((*ia, ca.clone()));
                i += 1;
            }
            (None, Some((jb, cb))) => {
                out.push((*jb, -(cb * factor)));
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

/// Basis of the kernel {w : M w = 0} of a dense rational matrix, via Gaussian
/// elimination. Rows of `m` are constraints.
pub fn dense_kernel_basis(m: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = m.iter().filter(|r| !r.iter().all(|x| x.is_zero())).cloned().collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, pr);
        let inv = {
            let p = &rows[r][c];
            BigRational::new(p.denom().clone(), p.numer().clone())
        };
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..ncols {
                    let d = &rows[r][k] * &f;
                    rows[i][k] -= d;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut w = vec![BigRational::zero(); ncols];
        w[free] = BigRational::from_integer(1.into());
        for (c, p) in pivot_of_col.iter().enumerate() {
            if let Some(pr) = p {
                w[c] = -rows[*pr][free].clone();
            }
        }
        basis.push(w);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(vec![(0, q(1)), (1, q(2))]), Some(0));
        assert_eq!(e.insert(vec![(1, q(1))]), Some(1));
        // (2, 4) + (0, 1) worth of span
        assert!(e.contains(vec![(0, q(2)), (1, q(5))]));
        assert_eq!(e.insert(vec![(0, q(3)), (1, q(1))]), None);
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn kernel_of_singular_system() {
        // x + y - 2z = 0, x - y = 0  =>  kernel spanned by (1, 1, 1)
        let m = vec![vec![q(1), q(1), q(-2)], vec![q(1), q(-1), q(0)]];
        let basis = dense_kernel_basis(&m, 3);
        assert_eq!(basis.len(), 1);
        let w = &basis[0];
        assert_eq!(w[0], w[1]);
        assert_eq!(w[0], w[2]);
    }
}
