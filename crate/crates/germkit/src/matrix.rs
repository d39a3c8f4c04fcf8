//! Matrices with polynomial entries: Jacobians, minors, determinants.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{ensure_same_ring, RingRc};

#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    ring: RingRc,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>, // row major
}

impl PolyMatrix {
    pub fn new(ring: &RingRc, rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            ensure_same_ring(e.ring(), ring, "matrix entry")?;
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn zero(ring: &RingRc, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &RingRc, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Poly::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Poly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Submatrix keeping the given rows and columns, in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.at(r, c).clone()))
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Exact determinant by cofactor expansion along the sparsest row.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        Ok(det_rec(self))
    }

    /// All maximal minors omitting one row (matrix must be (n+1) x n); minor
    /// i omits row i, indices starting at 0.
    pub fn row_deleted_minors(&self) -> Result<Vec<Poly>> {
        if self.rows != self.cols + 1 {
            return Err(Error::Invalid(format!(
                "expected (n+1) x n matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let all_cols: Vec<usize> = (0..self.cols).collect();
        (0..self.rows)
            .map(|omit| {
                let rows: Vec<usize> = (0..self.rows).filter(|&r| r != omit).collect();
                self.submatrix(&rows, &all_cols).det()
            })
            .collect()
    }

    /// Ideal generators given by all k x k minors.
    pub fn minors(&self, k: usize) -> Vec<Poly> {
        if k == 0 {
            return vec![Poly::one(&self.ring)];
        }
        if k > self.rows || k > self.cols {
            return vec![];
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::new();
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs).det().expect("square by construction"));
            }
        }
        out
    }
}

fn det_rec(m: &PolyMatrix) -> Poly {
    let n = m.rows();
    match n {
        0 => return Poly::one(m.ring()),
        1 => return m.at(0, 0).clone(),
        2 => {
            return m
                .at(0, 0)
                .mul(m.at(1, 1))
                .sub(&m.at(0, 1).mul(m.at(1, 0)))
        }
        _ => {}
    }
    // Expand along the row with the most zero entries.
    let best_row = (0..n)
        .max_by_key(|&r| (0..n).filter(|&c| m.at(r, c).is_zero()).count())
        .unwrap();
    let mut acc = Poly::zero(m.ring());
    let rows: Vec<usize> = (0..n).filter(|&r| r != best_row).collect();
    for c in 0..n {
        let e = m.at(best_row, c);
        if e.is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&x| x != c).collect();
        let minor = det_rec(&m.submatrix(&rows, &cols));
        let term = e.mul(&minor);
        if (best_row + c) % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// All k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Jacobian matrix of a tuple of polynomials: one row per component, one
/// column per variable of `vars` (indices into the common ring).
pub fn jacobian(components: &[Poly], vars: &[usize]) -> Result<PolyMatrix> {
    if components.is_empty() {
        return Err(Error::Invalid("jacobian of empty map".into()));
    }
    let ring = components[0].ring().clone();
    let mut entries = Vec::with_capacity(components.len() * vars.len());
    for f in components {
        ensure_same_ring(f.ring(), &ring, "jacobian component")?;
        for &v in vars {
            entries.push(f.partial(v));
        }
    }
    PolyMatrix::new(&ring, components.len(), vars.len(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn jacobian_and_small_determinants() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let f = vec![
            parse_poly("x", &r).unwrap(),
            parse_poly("y^2", &r).unwrap(),
            parse_poly("x*y", &r).unwrap(),
        ];
        let j = jacobian(&f, &[0, 1]).unwrap();
        assert_eq!(j.at(0, 0), &parse_poly("1", &r).unwrap());
        assert_eq!(j.at(1, 1), &parse_poly("2*y", &r).unwrap());
        assert_eq!(j.at(2, 0), &parse_poly("y", &r).unwrap());
        assert_eq!(j.at(2, 1), &parse_poly("x", &r).unwrap());

        let m = j.submatrix(&[1, 2], &[0, 1]);
        assert_eq!(m.det().unwrap(), parse_poly("-2*y^2", &r).unwrap());
        let m2 = j.submatrix(&[0, 2], &[0, 1]);
        assert_eq!(m2.det().unwrap(), parse_poly("x", &r).unwrap());
        assert_eq!(PolyMatrix::identity(&r, 3).det().unwrap(), Poly::one(&r));
    }

    #[test]
    fn non_square_rejected() {
        let r = Ring::new(vec!["x"]).unwrap();
        let m = PolyMatrix::zero(&r, 2, 3);
        assert!(matches!(m.det(), Err(Error::NonSquareMatrix { .. })));
    }

    #[test]
    fn minors_of_cross_cap_jacobian() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let f = vec![
            parse_poly("x", &r).unwrap(),
            parse_poly("y^2", &r).unwrap(),
            parse_poly("x*y", &r).unwrap(),
        ];
        let j = jacobian(&f, &[0, 1]).unwrap();
        let minors = j.row_deleted_minors().unwrap();
        assert_eq!(minors[0], parse_poly("-2*y^2", &r).unwrap());
        assert_eq!(minors[1], parse_poly("x", &r).unwrap());
        assert_eq!(minors[2], parse_poly("2*y", &r).unwrap());
    }
}
