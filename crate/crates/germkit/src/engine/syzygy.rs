//! Syzygy modules and kernels of module maps over subrings.
//!
//! Syzygies are extracted from a standard basis of the augmented module
//! {(g_j, e_j)} in R^(k+s) under a component-split order whose tag block
//! carries Schreyer keys (the lead monomials of the inputs). Elements whose
//! first block vanishes project to generators of Syz(g_1, ..., g_s).

use crate::engine::buchberger::{standard_basis, EngineLimits};
use crate::engine::scalar::Scalar;
use crate::engine::vector::{evec_from_poly, evec_to_polys, ETerm, EVec};
use crate::error::Result;
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, RingOrder};
use crate::poly::Poly;
use crate::ring::RingRc;
use num::bigint::BigInt;
use std::sync::Arc;

/// Generators of the syzygy module of `vectors` (elements of R^rank).
/// Polynomial syzygies generate the localized syzygy module as well, so a
/// global order is always used here.
pub fn syzygies<S: Scalar>(
    vectors: &[EVec<S>],
    rank: usize,
    ring_ord: RingOrder,
    lim: &EngineLimits,
) -> Result<Vec<EVec<S>>> {
    let s = vectors.len();
    let k = rank as u32;
    let nonzero: Vec<(usize, &EVec<S>)> =
        vectors.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();

    // Zero input vectors contribute unit syzygies directly.
    let mut out: Vec<EVec<S>> = Vec::new();
    let nvars = vectors
        .iter()
        .flat_map(|v| v.terms.first())
        .map(|t| t.mono.nvars())
        .next()
        .unwrap_or(0);
    for (j, v) in vectors.iter().enumerate() {
        if v.is_zero() {
            out.push(EVec {
                terms: vec![ETerm { mono: Monomial::one(nvars), comp: j as u32, coef: S::one() }],
            });
        }
    }
    if nonzero.is_empty() {
        return Ok(out);
    }

    let tags: Vec<Monomial> = nonzero.iter().map(|(_, v)| v.lead().mono.clone()).collect();
    let ord = ModuleOrder::split(ring_ord, k, Some(Arc::new(tags)));

    let mut aug: Vec<EVec<S>> = Vec::with_capacity(nonzero.len());
    for (slot, (orig_idx, v)) in nonzero.iter().enumerate() {
        let mut w = v.clone();
        let _ = orig_idx;
        w.terms.push(ETerm {
            mono: Monomial::one(w.terms[0].mono.nvars()),
            comp: k + slot as u32,
            coef: S::one(),
        });
        w.sort(&ord);
        aug.push(w);
    }
    let basis = standard_basis(&aug, &ord, lim)?;
    for b in &basis {
        if b.terms.iter().all(|t| t.comp >= k) {
            // project onto the tag block, mapping slots back to original
            // input positions
            let terms = b
                .terms
                .iter()
                .map(|t| {
                    let slot = (t.comp - k) as usize;
                    ETerm {
                        mono: t.mono.clone(),
                        comp: nonzero[slot].0 as u32,
                        coef: t.coef.clone(),
                    }
                })
                .collect();
            let mut v = EVec { terms };
            let _ = s;
            v.normalize();
            out.push(v);
        }
    }
    Ok(out)
}

/// Kernel of the map (subring)^M -> T/(modulus), e_j -> targets[j], i.e. all
/// vectors with coefficients from the subring spanned by `sub_positions`
/// whose combination of the targets falls in the ideal generated by
/// `modulus`. Returns generating vectors over `sub_ring`.
///
/// Pass 1 computes polynomial syzygies of (targets | modulus) over the full
/// ring; pass 2 intersects their projections with the subring-coefficient
/// block via a module elimination order.
pub fn subring_kernel(
    targets: &[Poly],
    modulus: &[Poly],
    full_ring: &RingRc,
    sub_positions: &[usize],
    sub_ring: &RingRc,
    lim: &EngineLimits,
) -> Result<Vec<Vec<Poly>>> {
    let m = targets.len();
    let ord1 = ModuleOrder::top(RingOrder::Grevlex);
    let mut all: Vec<EVec<BigInt>> = Vec::with_capacity(m + modulus.len());
    for p in targets.iter().chain(modulus.iter()) {
        all.push(evec_from_poly(p, &ord1));
    }
    let syz = syzygies(&all, 1, RingOrder::Grevlex, lim)?;

    // Project away the modulus coordinates.
    let projected: Vec<EVec<BigInt>> = syz
        .into_iter()
        .map(|v| {
            let terms = v.terms.into_iter().filter(|t| (t.comp as usize) < m).collect();
            EVec { terms }
        })
        .filter(|v: &EVec<BigInt>| !v.is_zero())
        .collect();

    // Eliminate the non-subring variables from the projected module.
    let kill: Vec<usize> =
        (0..full_ring.nvars()).filter(|i| !sub_positions.contains(i)).collect();
    let elim_ord = ModuleOrder::top(RingOrder::eliminate(kill, sub_positions.to_vec()));
    let mut proj_sorted = projected;
    for v in proj_sorted.iter_mut() {
        v.sort(&elim_ord);
    }
    let basis = standard_basis(&proj_sorted, &elim_ord, lim)?;

    let mut keep_mask = vec![false; full_ring.nvars()];
    for &i in sub_positions {
        keep_mask[i] = true;
    }
    let mut down_map = vec![usize::MAX; full_ring.nvars()];
    for (new_idx, &old_idx) in sub_positions.iter().enumerate() {
        down_map[old_idx] = new_idx;
    }

    let mut out = Vec::new();
    for b in &basis {
        if b.terms.iter().all(|t| t.mono.supported_on(&keep_mask)) {
            let polys_full = evec_to_polys(b, full_ring, m);
            let down: Vec<Poly> = polys_full
                .iter()
                .map(|p| {
                    let mut q = Poly::zero(sub_ring);
                    for (mono, c) in p.terms() {
                        let mut e = vec![0u32; sub_ring.nvars()];
                        for (i, &x) in mono.0.iter().enumerate() {
                            if x > 0 {
                                e[down_map[i]] = x;
                            }
                        }
                        q = q.add(&Poly::monomial(sub_ring, Monomial(e), c.clone()));
                    }
                    q
                })
                .collect();
            out.push(down);
        }
    }
    Ok(out)
}
