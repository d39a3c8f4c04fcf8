//! Vector-space dimensions at the origin via standard-monomial counting.
//!
//! Given a standard basis under a local order, the complement of the lead
//! staircase counts dim over C of the localized quotient; a component whose
//! staircase misses a pure power of some variable has infinite dimension.

use crate::dimension::Dim;
use crate::engine::buchberger::{standard_basis, EngineLimits};
use crate::engine::scalar::Scalar;
use crate::engine::vector::{evec_from_poly, evec_from_polys, EVec};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, RingOrder};

/// Counts monomials outside the staircase of the given lead monomials (all
/// in one component). Returns None when the complement is infinite.
fn count_standard_monomials(leads: &[Monomial], nvars: usize) -> Option<u64> {
    if leads.iter().any(|m| m.is_one()) {
        return Some(0);
    }
    if nvars == 0 {
        return Some(1);
    }
    // Pure power bound per variable; absence of one means an unblocked ray.
    let mut bound = vec![u32::MAX; nvars];
    for m in leads {
        let nz: Vec<usize> = (0..nvars).filter(|&v| m.0[v] > 0).collect();
        if nz.len() == 1 {
            let v = nz[0];
            bound[v] = bound[v].min(m.0[v]);
        }
    }
    if bound.iter().any(|&b| b == u32::MAX) {
        return None;
    }
    // Walk the finite box, skipping multiples of any lead.
    let mut count = 0u64;
    let mut expo = vec![0u32; nvars];
    'outer: loop {
        let m = Monomial(expo.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        for v in 0..nvars {
            expo[v] += 1;
            if expo[v] < bound[v] {
                continue 'outer;
            }
            expo[v] = 0;
        }
        break;
    }
    Some(count)
}

/// Dimension of the quotient R^rank / <leads of basis>, the basis being a
/// standard basis under a local order.
pub fn staircase_dim<S: Scalar>(basis: &[EVec<S>], rank: usize, nvars: usize) -> Dim {
    let mut total = 0u64;
    for comp in 0..rank as u32 {
        let leads: Vec<Monomial> = basis
            .iter()
            .filter(|v| !v.is_zero() && v.lead().comp == comp)
            .map(|v| v.lead().mono.clone())
            .collect();
        match count_standard_monomials(&leads, nvars) {
            Some(c) => total += c,
            None => return Dim::Infinite,
        }
    }
    Dim::Finite(total)
}

/// dim_C of (R/I) localized at the origin.
pub fn local_quotient_dim(
    gens: &[crate::poly::Poly],
    nvars: usize,
    lim: &EngineLimits,
) -> Result<Dim> {
    let ord = ModuleOrder::top(RingOrder::local(nvars));
    let vecs: Vec<EVec<num::bigint::BigInt>> =
        gens.iter().map(|p| evec_from_poly(p, &ord)).collect();
    let basis = standard_basis(&vecs, &ord, lim)?;
    Ok(staircase_dim(&basis, 1, nvars))
}

/// Standard monomials of R/I at the origin (basis of the local algebra),
/// sorted by ascending degree then grevlex; errors when infinite.
pub fn local_quotient_basis(
    gens: &[crate::poly::Poly],
    nvars: usize,
    lim: &EngineLimits,
) -> Result<Vec<Monomial>> {
    let ord = ModuleOrder::top(RingOrder::local(nvars));
    let vecs: Vec<EVec<num::bigint::BigInt>> =
        gens.iter().map(|p| evec_from_poly(p, &ord)).collect();
    let basis = standard_basis(&vecs, &ord, lim)?;
    let leads: Vec<Monomial> = basis
        .iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.lead().mono.clone())
        .collect();
    if count_standard_monomials(&leads, nvars).is_none() {
        return Err(Error::NotFinite("local algebra has an unblocked monomial ray".into()));
    }
    let mut bound = vec![0u32; nvars];
    for m in &leads {
        let nz: Vec<usize> = (0..nvars).filter(|&v| m.0[v] > 0).collect();
        if nz.len() == 1 {
            let v = nz[0];
            if bound[v] == 0 || m.0[v] < bound[v] {
                bound[v] = m.0[v];
            }
        }
    }
    let mut out = Vec::new();
    let mut expo = vec![0u32; nvars];
    if nvars == 0 {
        return Ok(vec![Monomial::one(0)]);
    }
    'outer: loop {
        let m = Monomial(expo.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        for v in 0..nvars {
            expo[v] += 1;
            if expo[v] < bound[v] {
                continue 'outer;
            }
            expo[v] = 0;
        }
        break;
    }
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| crate::monomial::cmp_grevlex(a, b))
    });
    Ok(out)
}

/// dim_C of the cokernel of the module presented by `relations` inside
/// R^rank, localized at the origin. Extra columns u_i * e_j (for fiber
/// restrictions) should already be part of `relations`.
pub fn module_coker_dim(
    relations: &[Vec<crate::poly::Poly>],
    rank: usize,
    nvars: usize,
    lim: &EngineLimits,
) -> Result<Dim> {
    if rank == 0 {
        return Ok(Dim::Finite(0));
    }
    let ord = ModuleOrder::top(RingOrder::local(nvars));
    let vecs: Vec<EVec<num::bigint::BigInt>> =
        relations.iter().map(|v| evec_from_polys(v, &ord)).collect();
    let basis = standard_basis(&vecs, &ord, lim)?;
    Ok(staircase_dim(&basis, rank, nvars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn staircase_counts() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let lim = EngineLimits::default();
        // Q[x,y]/<x, y^2> has basis {1, y}
        let gens = vec![parse_poly("x", &r).unwrap(), parse_poly("y^2", &r).unwrap()];
        assert_eq!(local_quotient_dim(&gens, 2, &lim).unwrap(), Dim::Finite(2));
        // <x> leaves the y-ray open
        let gens = vec![parse_poly("x", &r).unwrap()];
        assert_eq!(local_quotient_dim(&gens, 2, &lim).unwrap(), Dim::Infinite);
        // local unit: 1 + x generates everything
        let gens = vec![parse_poly("1 + x", &r).unwrap()];
        assert_eq!(local_quotient_dim(&gens, 2, &lim).unwrap(), Dim::Finite(0));
    }

    #[test]
    fn local_algebra_basis_of_cross_cap() {
        let r = Ring::new(vec!["x", "y"]).unwrap();
        let lim = EngineLimits::default();
        let gens = vec![
            parse_poly("x", &r).unwrap(),
            parse_poly("y^2", &r).unwrap(),
            parse_poly("x*y", &r).unwrap(),
        ];
        let basis = local_quotient_basis(&gens, 2, &lim).unwrap();
        assert_eq!(basis, vec![Monomial(vec![0, 0]), Monomial(vec![0, 1])]);
    }
}
