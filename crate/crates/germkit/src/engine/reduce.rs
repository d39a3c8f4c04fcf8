//! Normal forms: ordinary multivariate division for global orders and Mora's
//! tangent-cone normal form for local (and mixed) orders.
//!
//! Engine normal forms are scale-free: the result equals a nonzero rational
//! multiple of the true remainder, which is all basis construction and
//! membership testing need. The exact public normal form lives in `ideal.rs`.

use crate::engine::scalar::Scalar;
use crate::engine::vector::{ETerm, EVec};
use crate::error::{Error, Result};
use crate::order::ModuleOrder;

const RENORM_BITS: usize = 2048;

/// Full normal form for global orders: repeatedly cancels the leading term
/// against the first basis element whose lead divides it, moving irreducible
/// leads to the output.
pub fn nf_global<S: Scalar>(v: &EVec<S>, basis: &[EVec<S>], ord: &ModuleOrder) -> EVec<S> {
    nf_global_skip(v, basis, ord, None)
}

pub fn nf_global_skip<S: Scalar>(
    v: &EVec<S>,
    basis: &[EVec<S>],
    ord: &ModuleOrder,
    skip: Option<usize>,
) -> EVec<S> {
    let mut h = v.clone();
    let mut done: Vec<ETerm<S>> = Vec::new();
    while !h.is_zero() {
        let lead = h.lead().clone();
        let red = basis.iter().enumerate().find(|(i, g)| {
            Some(*i) != skip
                && !g.is_zero()
                && g.lead().comp == lead.comp
                && g.lead().mono.divides(&lead.mono)
        });
        match red {
            Some((_, g)) => {
                let gl = g.lead();
                let (ch, cg) = S::cross(&lead.coef, &gl.coef);
                let shift = gl.mono.quotient_into(&lead.mono);
                // scale already-final terms to stay consistent with h
                if !done.is_empty() {
                    for t in done.iter_mut() {
                        t.coef = t.coef.mul(&cg);
                    }
                }
                h = EVec::combine(&h, &cg, g, &ch, &shift, ord);
                if h.coef_bits() > RENORM_BITS {
                    joint_normalize(&mut done, &mut h);
                }
            }
            None => {
                done.push(h.terms.remove(0));
            }
        }
    }
    let mut out = EVec { terms: done };
    out.normalize();
    out
}

fn joint_normalize<S: Scalar>(done: &mut Vec<ETerm<S>>, h: &mut EVec<S>) {
    S::normalize(
        done.iter_mut()
            .map(|t| &mut t.coef)
            .chain(h.terms.iter_mut().map(|t| &mut t.coef)),
    );
}

/// Mora weak normal form. Returns a vector `r` with `u * v = sum q_i g_i + r`
/// for some local unit u; in particular r = 0 exactly when v lies in the
/// localized module generated by the basis. The leading term of a nonzero r
/// is not divisible by any basis lead.
pub fn nf_mora<S: Scalar>(
    v: &EVec<S>,
    basis: &[EVec<S>],
    ord: &ModuleOrder,
    max_steps: u64,
) -> Result<EVec<S>> {
    let deg = |m: &crate::monomial::Monomial| ord.ring.degree(m);
    let ecart = |w: &EVec<S>| -> u64 { w.max_degree(deg) - deg(&w.lead().mono) };

    let mut pool: Vec<EVec<S>> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut h = v.clone();
    let mut steps = 0u64;
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        let lead = h.lead();
        let candidates: Vec<usize> = pool
            .iter()
            .enumerate()
            .filter(|(_, g)| g.lead().comp == lead.comp && g.lead().mono.divides(&lead.mono))
            .map(|(i, _)| i)
            .collect();
        if candidates.is_empty() {
            h.normalize();
            return Ok(h);
        }
        steps += 1;
        if steps > max_steps {
            return Err(Error::ResourceLimit(format!(
                "Mora normal form exceeded {max_steps} reduction steps"
            )));
        }
        let best = *candidates
            .iter()
            .min_by_key(|&&i| (ecart(&pool[i]), i))
            .unwrap();
        let e_g = ecart(&pool[best]);
        let e_h = ecart(&h);
        if e_g > e_h {
            pool.push(h.clone());
        }
        let g = &pool[best];
        let gl = g.lead();
        let (ch, cg) = S::cross(&h.lead().coef, &gl.coef);
        let shift = gl.mono.quotient_into(&h.lead().mono);
        h = EVec::combine(&h, &cg, g, &ch, &shift, ord);
        if h.coef_bits() > RENORM_BITS {
            h.normalize();
        }
    }
}

/// Dispatch on the order kind.
pub fn normal_form<S: Scalar>(
    v: &EVec<S>,
    basis: &[EVec<S>],
    ord: &ModuleOrder,
    max_steps: u64,
) -> Result<EVec<S>> {
    if ord.is_global() {
        Ok(nf_global(v, basis, ord))
    } else {
        nf_mora(v, basis, ord, max_steps)
    }
}
