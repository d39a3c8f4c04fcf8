//! Minimal free resolutions over the local ring at the origin and the
//! projective dimension they certify.
//!
//! Levels are produced by iterated syzygy computation (polynomial syzygies
//! generate the localized syzygy modules) and the complex is minimized by
//! splitting off trivial R -> R summands wherever a matrix entry is a local
//! unit. Entries of the minimized complex all lie in the maximal ideal, so
//! its length is the projective dimension over the local ring.

use crate::engine::buchberger::EngineLimits;
use crate::engine::syzygy::syzygies;
use crate::engine::vector::{evec_from_polys, evec_to_polys, EVec};
use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::order::{ModuleOrder, RingOrder};
use crate::poly::Poly;
use crate::ring::RingRc;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;

fn column(mat: &PolyMatrix, j: usize) -> Vec<Poly> {
    (0..mat.rows()).map(|r| mat.at(r, j).clone()).collect()
}

fn matrix_from_columns(ring: &RingRc, rows: usize, cols: Vec<Vec<Poly>>) -> PolyMatrix {
    let mut m = PolyMatrix::zero(ring, rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (r, p) in col.iter().enumerate() {
            *m.at_mut(r, j) = p.clone();
        }
    }
    m
}

fn delete_row(mat: &PolyMatrix, row: usize) -> PolyMatrix {
    let rows: Vec<usize> = (0..mat.rows()).filter(|&r| r != row).collect();
    let cols: Vec<usize> = (0..mat.cols()).collect();
    mat.submatrix(&rows, &cols)
}

fn delete_col(mat: &PolyMatrix, col: usize) -> PolyMatrix {
    let rows: Vec<usize> = (0..mat.rows()).collect();
    let cols: Vec<usize> = (0..mat.cols()).filter(|&c| c != col).collect();
    mat.submatrix(&rows, &cols)
}

fn find_unit(mat: &PolyMatrix) -> Option<(usize, usize)> {
    for r in 0..mat.rows() {
        for c in 0..mat.cols() {
            if mat.at(r, c).is_local_unit() {
                return Some((r, c));
            }
        }
    }
    None
}

/// Rescales every column to primitive form, compensating on the rows of the
/// following matrix so all compositions are preserved exactly.
fn renormalize(complex: &mut [PolyMatrix]) {
    for idx in 0..complex.len() {
        for j in 0..complex[idx].cols() {
            let col: Vec<&Poly> = (0..complex[idx].rows()).map(|r| complex[idx].at(r, j)).collect();
            let gamma = joint_primitive_scale(&col);
            if gamma.is_one() {
                continue;
            }
            for r in 0..complex[idx].rows() {
                let scaled = complex[idx].at(r, j).scale(&gamma);
                *complex[idx].at_mut(r, j) = scaled;
            }
            if idx + 1 < complex.len() {
                let inv = BigRational::one() / &gamma;
                let next = &mut complex[idx + 1];
                for c in 0..next.cols() {
                    let scaled = next.at(j, c).scale(&inv);
                    *next.at_mut(j, c) = scaled;
                }
            }
        }
    }
}

/// Scale turning a tuple of polynomials jointly primitive (integer
/// coefficients with gcd 1, first nonzero entry's grevlex lead positive).
fn joint_primitive_scale(col: &[&Poly]) -> BigRational {
    use num::{Integer, Signed, Zero};
    let mut den_lcm = num::BigInt::one();
    let mut num_gcd = num::BigInt::zero();
    let mut lead_sign: Option<bool> = None;
    for p in col {
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    for p in col {
        for (_, c) in p.terms() {
            num_gcd = num_gcd.gcd(&(c.numer() * (&den_lcm / c.denom())));
        }
        if lead_sign.is_none() && !p.is_zero() {
            let lt = p.sorted_terms()[0].1.clone();
            lead_sign = Some(lt.is_negative());
        }
    }
    if num_gcd.is_zero() {
        return BigRational::one();
    }
    let mut s = BigRational::new(den_lcm, num_gcd);
    if lead_sign == Some(true) {
        s = -s;
    }
    s
}

/// One minimization step at complex level `idx` splitting the unit at (r, c).
fn split_unit(complex: &mut [PolyMatrix], idx: usize, r: usize, c: usize) -> (PolyMatrix, Option<PolyMatrix>, Option<PolyMatrix>) {
    let u = complex[idx].at(r, c).clone();
    let row_r: Vec<Poly> = (0..complex[idx].cols())
        .map(|j| complex[idx].at(r, j).clone())
        .collect();
    let col_c: Vec<Poly> = (0..complex[idx].rows())
        .map(|k| complex[idx].at(k, c).clone())
        .collect();

    // Column operations C_j := u*C_j - a_j*C_c clear row r of A_idx.
    for j in 0..complex[idx].cols() {
        if j == c || row_r[j].is_zero() {
            continue;
        }
        for k in 0..complex[idx].rows() {
            let new = complex[idx].at(k, j).mul(&u).sub(&row_r[j].mul(&col_c[k]));
            *complex[idx].at_mut(k, j) = new;
        }
    }
    // Compensate on the next level: row_c := u*row_c + sum a_j*row_j.
    if idx + 1 < complex.len() {
        let next = &mut complex[idx + 1];
        for col in 0..next.cols() {
            let mut acc = next.at(c, col).mul(&u);
            for (j, a) in row_r.iter().enumerate() {
                if j != c && !a.is_zero() {
                    acc = acc.add(&a.mul(next.at(j, col)));
                }
            }
            *next.at_mut(c, col) = acc;
        }
    }
    // Row operations R_k := u*R_k - b_k*R_r clear column c of A_idx. After
    // the column pass, row r is zero except for the unit at (r, c), so only
    // column c changes and the rest of each row is scaled by u.
    for k in 0..complex[idx].rows() {
        if k == r || col_c[k].is_zero() {
            continue;
        }
        for j in 0..complex[idx].cols() {
            let sub = col_c[k].mul(complex[idx].at(r, j));
            let new = complex[idx].at(k, j).mul(&u).sub(&sub);
            *complex[idx].at_mut(k, j) = new;
        }
    }
    // Compensate on the previous level: col_r := u*col_r + sum b_k*col_k.
    if idx > 0 {
        let prev = &mut complex[idx - 1];
        for row in 0..prev.rows() {
            let mut acc = prev.at(row, r).mul(&u);
            for (k, b) in col_c.iter().enumerate() {
                if k != r && !b.is_zero() {
                    acc = acc.add(&b.mul(prev.at(row, k)));
                }
            }
            *prev.at_mut(row, r) = acc;
        }
        // Complex property forces the compensated column to vanish.
        debug_assert!((0..prev.rows()).all(|row| prev.at(row, r).is_zero()));
    }

    let new_mid = delete_col(&delete_row(&complex[idx], r), c);
    let new_next = (idx + 1 < complex.len()).then(|| delete_row(&complex[idx + 1], c));
    let new_prev = (idx > 0).then(|| delete_col(&complex[idx - 1], r));
    (new_mid, new_next, new_prev)
}

fn minimize_complex(complex: &mut [PolyMatrix]) {
    loop {
        let mut hit = None;
        for (idx, mat) in complex.iter().enumerate() {
            if let Some((r, c)) = find_unit(mat) {
                hit = Some((idx, r, c));
                break;
            }
        }
        match hit {
            Some((idx, r, c)) => {
                let (mid, next, prev) = split_unit(complex, idx, r, c);
                complex[idx] = mid;
                if let Some(n) = next {
                    complex[idx + 1] = n;
                }
                if let Some(p) = prev {
                    complex[idx - 1] = p;
                }
                renormalize(complex);
            }
            None => break,
        }
    }
}

/// A minimal free resolution of the cokernel of a presentation over the
/// local ring at the origin.
#[derive(Debug, Clone)]
pub struct ResolutionData {
    /// maps[0] presents the module on `rank` generators; maps[i] resolves
    /// the relations of maps[i-1]. Entries all lie in the maximal ideal.
    pub maps: Vec<PolyMatrix>,
    /// Number of generators after minimization (zero for the zero module).
    pub rank: usize,
}

impl ResolutionData {
    pub fn projective_dimension(&self) -> usize {
        self.maps.len()
    }
}

/// Resolves coker(relations) in R^rank over the local ring at the origin.
pub fn minimal_free_resolution(
    ring: &RingRc,
    rank: usize,
    relations: &[Vec<Poly>],
    lim: &EngineLimits,
) -> Result<ResolutionData> {
    let mut complex = vec![matrix_from_columns(ring, rank, relations.to_vec())];
    let max_levels = ring.nvars() + 2;
    loop {
        lim.check_deadline()?;
        minimize_complex(&mut complex);
        let last = complex.last().unwrap();
        if last.cols() == 0 || last.rows() == 0 {
            break;
        }
        if complex.len() > max_levels {
            return Err(Error::ResourceLimit(format!(
                "free resolution exceeded {max_levels} levels"
            )));
        }
        let ord = ModuleOrder::top(RingOrder::Grevlex);
        let col_vecs: Vec<EVec<BigInt>> = (0..last.cols())
            .map(|j| evec_from_polys(&column(last, j), &ord))
            .collect();
        let syz = syzygies(&col_vecs, last.rows(), RingOrder::Grevlex, lim)?;
        let s_rank = last.cols();
        if syz.is_empty() {
            break;
        }
        let next_cols: Vec<Vec<Poly>> = syz.iter().map(|v| evec_to_polys(v, ring, s_rank)).collect();
        complex.push(matrix_from_columns(ring, s_rank, next_cols));
    }
    minimize_complex(&mut complex);

    let rank_out = complex[0].rows();
    while matches!(complex.last(), Some(m) if m.cols() == 0 || m.rows() == 0) {
        complex.pop();
    }
    Ok(ResolutionData { maps: complex, rank: rank_out })
}

/// Checks that consecutive maps compose to zero and all entries lie in the
/// maximal ideal.
pub fn verify_resolution(res: &ResolutionData) -> bool {
    for m in &res.maps {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if m.at(r, c).is_local_unit() {
                    return false;
                }
            }
        }
    }
    for w in res.maps.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if a.cols() != b.rows() {
            return false;
        }
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut acc = Poly::zero(a.ring());
                for k in 0..a.cols() {
                    acc = acc.add(&a.at(i, k).mul(b.at(k, j)));
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn koszul_maximal_ideal_pd2() {
        // R/<x, y>: 0 -> R -> R^2 -> R -> R/<x,y> -> 0, pd 2
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let lim = EngineLimits::default();
        let rels = vec![
            vec![parse_poly("x", &r).unwrap()],
            vec![parse_poly("y", &r).unwrap()],
        ];
        let res = minimal_free_resolution(&r, 1, &rels, &lim).unwrap();
        assert_eq!(res.projective_dimension(), 2);
        assert!(verify_resolution(&res));
    }

    #[test]
    fn principal_ideal_pd1() {
        let r = Ring::new(vec!["x"]).unwrap();
        let lim = EngineLimits::default();
        let rels = vec![vec![parse_poly("x", &r).unwrap()]];
        let res = minimal_free_resolution(&r, 1, &rels, &lim).unwrap();
        assert_eq!(res.projective_dimension(), 1);
        assert!(verify_resolution(&res));
    }

    #[test]
    fn free_module_pd0() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let lim = EngineLimits::default();
        let res = minimal_free_resolution(&r, 2, &[], &lim).unwrap();
        assert_eq!(res.projective_dimension(), 0);
        assert_eq!(res.rank, 2);
    }

    #[test]
    fn zero_module_pd0() {
        // coker of the identity is zero; minimization wipes everything
        let r = Ring::new(vec!["x"]).unwrap();
        let lim = EngineLimits::default();
        let rels = vec![vec![parse_poly("1", &r).unwrap()]];
        let res = minimal_free_resolution(&r, 1, &rels, &lim).unwrap();
        assert_eq!(res.projective_dimension(), 0);
        assert_eq!(res.rank, 0);
    }

    #[test]
    fn unit_plus_higher_terms_is_split() {
        // coker of (1 + x) over the local ring is zero
        let r = Ring::new(vec!["x"]).unwrap();
        let lim = EngineLimits::default();
        let rels = vec![vec![parse_poly("1 + x", &r).unwrap()]];
        let res = minimal_free_resolution(&r, 1, &rels, &lim).unwrap();
        assert_eq!(res.projective_dimension(), 0);
        assert_eq!(res.rank, 0);
    }

    #[test]
    fn full_maximal_ideal_in_three_variables_pd3() {
        let r = Ring::new(vec!["x", "y", "z"]).unwrap();
        let lim = EngineLimits::default();
        let rels = vec![
            vec![parse_poly("x", &r).unwrap()],
            vec![parse_poly("y", &r).unwrap()],
            vec![parse_poly("z", &r).unwrap()],
        ];
        let res = minimal_free_resolution(&r, 1, &rels, &lim).unwrap();
        assert_eq!(res.projective_dimension(), 3);
        assert!(verify_resolution(&res));
    }
}
