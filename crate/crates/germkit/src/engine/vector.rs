//! Engine-internal representation of elements of free modules R^k (ideals are
//! the rank-1 case). Terms are kept sorted strictly descending under the
//! active module order; coefficients live in a `Scalar` domain.

use crate::engine::scalar::Scalar;
use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use crate::poly::Poly;
use crate::ring::RingRc;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ETerm<S> {
    pub mono: Monomial,
    pub comp: u32,
    pub coef: S,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EVec<S> {
    pub terms: Vec<ETerm<S>>,
}

impl<S: Scalar> EVec<S> {
    pub fn zero() -> Self {
        EVec { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &ETerm<S> {
        &self.terms[0]
    }

    pub fn sort(&mut self, ord: &ModuleOrder) {
        self.terms
            .sort_by(|a, b| ord.cmp(&b.mono, b.comp, &a.mono, a.comp));
        // merge equal (mono, comp) pairs
        let mut out: Vec<ETerm<S>> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.mono == t.mono && last.comp == t.comp {
                    last.coef = last.coef.sub(&t.coef.neg());
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coef.is_zero());
        self.terms = out;
    }

    pub fn normalize(&mut self) {
        S::normalize(self.terms.iter_mut().map(|t| &mut t.coef));
    }

    /// Max ring-monomial degree over all terms (for ecart bookkeeping).
    pub fn max_degree(&self, deg: impl Fn(&Monomial) -> u64) -> u64 {
        self.terms.iter().map(|t| deg(&t.mono)).max().unwrap_or(0)
    }

    /// self * c, shifted by monomial m and component offset.
    pub fn scaled_shift(&self, c: &S, m: &Monomial, comp_shift: u32) -> EVec<S> {
        EVec {
            terms: self
                .terms
                .iter()
                .map(|t| ETerm {
                    mono: t.mono.mul(m),
                    comp: t.comp + comp_shift,
                    coef: t.coef.mul(c),
                })
                .collect(),
        }
    }

    /// ca * a  -  cb * (x^m shift of b), merged under `ord`. The lead
    /// cancellation of reduction and S-vectors both route through here.
    pub fn combine(
        a: &EVec<S>,
        ca: &S,
        b: &EVec<S>,
        cb: &S,
        bm: &Monomial,
        ord: &ModuleOrder,
    ) -> EVec<S> {
        let mut out: Vec<ETerm<S>> = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < a.terms.len() || j < b.terms.len() {
            let pick_a = if i >= a.terms.len() {
                false
            } else if j >= b.terms.len() {
                true
            } else {
                let ta = &a.terms[i];
                let tb = &b.terms[j];
                let bmono = tb.mono.mul(bm);
                match ord.cmp(&ta.mono, ta.comp, &bmono, tb.comp) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        let c = ta.coef.mul(ca).sub(&tb.coef.mul(cb));
                        if !c.is_zero() {
                            out.push(ETerm { mono: bmono, comp: ta.comp, coef: c });
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
            };
            if pick_a {
                let ta = &a.terms[i];
                out.push(ETerm { mono: ta.mono.clone(), comp: ta.comp, coef: ta.coef.mul(ca) });
                i += 1;
            } else {
                let tb = &b.terms[j];
                out.push(ETerm {
                    mono: tb.mono.mul(bm),
                    comp: tb.comp,
                    coef: tb.coef.mul(cb).neg(),
                });
                j += 1;
            }
        }
        EVec { terms: out }
    }

    pub fn coef_bits(&self) -> usize {
        self.terms.iter().map(|t| t.coef.bit_size()).max().unwrap_or(0)
    }
}

/// Converts a tuple of polynomials (one per component, rank = polys.len())
/// into an engine vector over Z by clearing denominators.
pub fn evec_from_polys(polys: &[Poly], ord: &ModuleOrder) -> EVec<BigInt> {
    let mut den_lcm = BigInt::one();
    for p in polys {
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    let mut terms = Vec::new();
    for (comp, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            let coef = c.numer() * (&den_lcm / c.denom());
            terms.push(ETerm { mono: m.clone(), comp: comp as u32, coef });
        }
    }
    let mut v = EVec { terms };
    v.sort(ord);
    v.normalize();
    v
}

pub fn evec_from_poly(p: &Poly, ord: &ModuleOrder) -> EVec<BigInt> {
    evec_from_polys(std::slice::from_ref(p), ord)
}

/// Back to polynomials (components 0..rank), integer coefficients.
pub fn evec_to_polys(v: &EVec<BigInt>, ring: &RingRc, rank: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(ring); rank];
    for t in &v.terms {
        out[t.comp as usize] = out[t.comp as usize].add(&Poly::monomial(
            ring,
            t.mono.clone(),
            BigRational::from_integer(t.coef.clone()),
        ));
    }
    out
}

pub fn evec_to_poly(v: &EVec<BigInt>, ring: &RingRc) -> Poly {
    evec_to_polys(v, ring, 1).pop().unwrap()
}
