//! Standard basis computation: Buchberger's algorithm with the product and
//! chain criteria for global orders, the same pair loop driven by Mora's
//! normal form for local orders. Deterministic pair selection by (degree of
//! the pair lcm, indices), which is the sugar strategy for global orders and
//! a weighted-ecart-flavoured strategy under weighted local orders.

use crate::engine::reduce::{nf_global, nf_global_skip, normal_form};
use crate::engine::scalar::Scalar;
use crate::engine::vector::EVec;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::time::Instant;

/// Hard limits for a single engine computation.
#[derive(Debug, Clone)]
pub struct EngineLimits {
    /// Cap on the (weighted) degree of any processed S-pair lcm.
    pub pair_degree_cap: u64,
    /// Cap on Mora reduction steps within one normal form.
    pub mora_step_cap: u64,
    /// Optional wall-clock deadline.
    pub deadline: Option<Instant>,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits { pair_degree_cap: 40, mora_step_cap: 2_000_000, deadline: None }
    }
}

impl EngineLimits {
    pub fn check_deadline(&self) -> Result<()> {
        if let Some(d) = self.deadline {
            if Instant::now() > d {
                return Err(Error::ResourceLimit("wall clock limit exceeded".into()));
            }
        }
        Ok(())
    }
}

fn spoly<S: Scalar>(f: &EVec<S>, g: &EVec<S>, ord: &ModuleOrder) -> EVec<S> {
    let lf = f.lead();
    let lg = g.lead();
    debug_assert_eq!(lf.comp, lg.comp);
    let lcm = lf.mono.lcm(&lg.mono);
    let (cf, cg) = S::cross(&lf.coef, &lg.coef);
    // cf*x^(lcm/lf)*f - cg*x^(lcm/lg)*g, via combine on shifted f
    let sf = f.scaled_shift(&S::one(), &lf.mono.quotient_into(&lcm), 0);
    EVec::combine(&sf, &cf, g, &cg, &lg.mono.quotient_into(&lcm), ord)
}

pub fn standard_basis<S: Scalar>(
    gens: &[EVec<S>],
    ord: &ModuleOrder,
    lim: &EngineLimits,
) -> Result<Vec<EVec<S>>> {
    let mut basis: Vec<EVec<S>> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let mut g = g.clone();
            g.normalize();
            basis.push(g);
        }
    }
    let is_global = ord.is_global();
    let rank1 = basis
        .iter()
        .flat_map(|v| v.terms.iter())
        .all(|t| t.comp == 0);

    let mut treated: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let lcm_of = |a: &EVec<S>, b: &EVec<S>| -> Option<Monomial> {
        let (la, lb) = (a.lead(), b.lead());
        (la.comp == lb.comp).then(|| la.mono.lcm(&lb.mono))
    };
    let push_pairs = |heap: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                      treated: &mut BTreeSet<(usize, usize)>,
                      basis: &[EVec<S>],
                      j: usize| {
        for i in 0..j {
            match lcm_of(&basis[i], &basis[j]) {
                None => {
                    treated.insert((i, j));
                }
                Some(l) => {
                    // Product criterion: coprime leads, ideals under a global
                    // order only.
                    if rank1
                        && is_global
                        && basis[i].lead().mono.is_coprime(&basis[j].lead().mono)
                    {
                        treated.insert((i, j));
                    } else {
                        heap.push(Reverse((ord.ring.degree(&l), i, j)));
                    }
                }
            }
        }
    };

    for j in 0..basis.len() {
        push_pairs(&mut heap, &mut treated, &basis, j);
    }

    while let Some(Reverse((deg, i, j))) = heap.pop() {
        if treated.contains(&(i, j)) {
            continue;
        }
        lim.check_deadline()?;
        let lcm = match lcm_of(&basis[i], &basis[j]) {
            Some(l) => l,
            None => {
                treated.insert((i, j));
                continue;
            }
        };
        // Chain criterion: some k with lead dividing the lcm strictly, both
        // sub-pairs already considered. Strictness keeps the skip relation
        // well founded.
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lk = basis[k].lead();
            if lk.comp != basis[i].lead().comp || !lk.mono.divides(&lcm) {
                return false;
            }
            let lik = basis[i].lead().mono.lcm(&lk.mono);
            let ljk = basis[j].lead().mono.lcm(&lk.mono);
            if lik == lcm || ljk == lcm {
                return false;
            }
            treated.contains(&key(i, k)) && treated.contains(&key(j, k))
        });
        treated.insert((i, j));
        if chain {
            continue;
        }
        if deg > lim.pair_degree_cap {
            return Err(Error::ResourceLimit(format!(
                "S-pair degree {deg} exceeds pair cap {}",
                lim.pair_degree_cap
            )));
        }
        let s = spoly(&basis[i], &basis[j], ord);
        if s.is_zero() {
            continue;
        }
        let mut r = normal_form(&s, &basis, ord, lim.mora_step_cap)?;
        if r.is_zero() {
            continue;
        }
        r.normalize();
        basis.push(r);
        let newest = basis.len() - 1;
        push_pairs(&mut heap, &mut treated, &basis, newest);
    }

    Ok(finalize(basis, ord))
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes (no lead divides another) and, under global orders, fully
/// tail-reduces; output is sorted by ascending lead for reproducibility.
fn finalize<S: Scalar>(mut basis: Vec<EVec<S>>, ord: &ModuleOrder) -> Vec<EVec<S>> {
    // Drop elements whose lead is divisible by another remaining lead.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (li, lj) = (basis[i].lead(), basis[j].lead());
            if li.comp == lj.comp && lj.mono.divides(&li.mono) {
                if li.mono == lj.mono && i < j {
                    continue; // equal leads: keep the earlier one
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<EVec<S>> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(v, k)| k.then_some(v))
        .collect();

    if ord.is_global() {
        for i in 0..minimal.len() {
            let v = minimal[i].clone();
            let mut r = nf_global_skip(&v, &minimal, ord, Some(i));
            if r.is_zero() {
                // lead was unique, so this cannot happen for a minimal set
                r = v;
            }
            minimal[i] = r;
        }
    }
    for v in minimal.iter_mut() {
        v.normalize();
    }
    minimal.sort_by(|a, b| {
        let (la, lb) = (a.lead(), b.lead());
        ord.cmp(&la.mono, la.comp, &lb.mono, lb.comp)
    });
    minimal
}

/// Membership of `v` in the module generated by `basis` (a standard basis
/// for `ord`): local membership means membership in the localized module.
pub fn reduces_to_zero<S: Scalar>(
    v: &EVec<S>,
    basis: &[EVec<S>],
    ord: &ModuleOrder,
    lim: &EngineLimits,
) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    if ord.is_global() {
        Ok(nf_global(v, basis, ord).is_zero())
    } else {
        Ok(crate::engine::reduce::nf_mora(v, basis, ord, lim.mora_step_cap)?.is_zero())
    }
}
