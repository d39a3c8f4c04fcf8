//! Monomial orders: global and local ring orders, block (elimination) orders,
//! and their extensions to free modules.
//!
//! Local orders (1 is the largest monomial) realize computations in the local
//! ring at the origin; standard bases under them are computed with Mora's
//! normal form rather than ordinary division.

use crate::monomial::{cmp_grevlex, cmp_grevlex_on, cmp_lex, Monomial};
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingOrder {
    Lex,
    Grevlex,
    /// Weighted degree first (larger is greater), grevlex tie break.
    WeightedGlobal(Vec<u64>),
    /// Weighted degree first with *smaller* degree greater, grevlex tie
    /// break; 1 is the largest monomial, so this is a local order.
    WeightedLocal(Vec<u64>),
    /// Ordered blocks of variable positions; earlier blocks dominate. Each
    /// block is compared by its own order restricted to the block variables.
    Block(Vec<(RingOrder, Vec<usize>)>),
}

impl RingOrder {
    /// Degree-one-weights local order (the `ds` style order).
    pub fn local(nvars: usize) -> RingOrder {
        RingOrder::WeightedLocal(vec![1; nvars])
    }

    /// Block order that makes `kill` dominate: the standard elimination
    /// order killing the given variable positions.
    pub fn eliminate(kill: Vec<usize>, keep: Vec<usize>) -> RingOrder {
        RingOrder::Block(vec![(RingOrder::Grevlex, kill), (RingOrder::Grevlex, keep)])
    }

    pub fn is_global(&self) -> bool {
        match self {
            RingOrder::Lex | RingOrder::Grevlex | RingOrder::WeightedGlobal(_) => true,
            RingOrder::WeightedLocal(_) => false,
            RingOrder::Block(blocks) => blocks.iter().all(|(o, _)| o.is_global()),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_on(a, b, None)
    }

    fn cmp_on(&self, a: &Monomial, b: &Monomial, vars: Option<&[usize]>) -> Ordering {
        match self {
            RingOrder::Lex => match vars {
                None => cmp_lex(a, b),
                Some(vs) => {
                    for &i in vs {
                        match a.0[i].cmp(&b.0[i]) {
                            Ordering::Equal => continue,
                            ord => return ord,
                        }
                    }
                    Ordering::Equal
                }
            },
            RingOrder::Grevlex => match vars {
                None => cmp_grevlex(a, b),
                Some(vs) => cmp_grevlex_on(a, b, vs),
            },
            RingOrder::WeightedGlobal(w) => {
                let (da, db) = wdeg_pair(a, b, w, vars);
                match da.cmp(&db) {
                    Ordering::Equal => RingOrder::Grevlex.cmp_on(a, b, vars),
                    ord => ord,
                }
            }
            RingOrder::WeightedLocal(w) => {
                let (da, db) = wdeg_pair(a, b, w, vars);
                match db.cmp(&da) {
                    Ordering::Equal => RingOrder::Grevlex.cmp_on(a, b, vars),
                    ord => ord,
                }
            }
            RingOrder::Block(blocks) => {
                for (ord, block_vars) in blocks {
                    match ord.cmp_on(a, b, Some(block_vars)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// The degree function used by ecart bookkeeping: weighted when the
    /// order carries weights, total degree otherwise.
    pub fn degree(&self, m: &Monomial) -> u64 {
        match self {
            RingOrder::WeightedGlobal(w) | RingOrder::WeightedLocal(w) => m.weighted_degree(w),
            _ => m.degree(),
        }
    }
}

fn wdeg_pair(a: &Monomial, b: &Monomial, w: &[u64], vars: Option<&[usize]>) -> (u64, u64) {
    match vars {
        None => (a.weighted_degree(w), b.weighted_degree(w)),
        Some(vs) => (
            vs.iter().map(|&i| a.0[i] as u64 * w[i]).sum(),
            vs.iter().map(|&i| b.0[i] as u64 * w[i]).sum(),
        ),
    }
}

/// Extension of a ring order to free modules R^k. Monomials are pairs
/// (ring monomial, component).
#[derive(Debug, Clone)]
pub enum ModuleExtension {
    /// Term over position: compare ring monomials first, lower component
    /// breaks ties.
    Top,
    /// Position over term: lower component dominates.
    Pot,
    /// Components below `split` dominate all components above; within the
    /// leading block compare term-over-position; within the tail block use
    /// Schreyer-style tag keys when present (tag monomial times the ring
    /// monomial), otherwise term-over-position again. This is the order that
    /// drives syzygy extraction.
    SplitTag {
        split: u32,
        tags: Option<Arc<Vec<Monomial>>>,
    },
}

#[derive(Debug, Clone)]
pub struct ModuleOrder {
    pub ring: RingOrder,
    pub ext: ModuleExtension,
}

impl ModuleOrder {
    pub fn top(ring: RingOrder) -> Self {
        ModuleOrder { ring, ext: ModuleExtension::Top }
    }

    pub fn pot(ring: RingOrder) -> Self {
        ModuleOrder { ring, ext: ModuleExtension::Pot }
    }

    pub fn split(ring: RingOrder, split: u32, tags: Option<Arc<Vec<Monomial>>>) -> Self {
        ModuleOrder { ring, ext: ModuleExtension::SplitTag { split, tags } }
    }

    pub fn is_global(&self) -> bool {
        self.ring.is_global()
    }

    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        match &self.ext {
            ModuleExtension::Top => match self.ring.cmp(am, bm) {
                Ordering::Equal => bc.cmp(&ac),
                ord => ord,
            },
            ModuleExtension::Pot => match bc.cmp(&ac) {
                Ordering::Equal => self.ring.cmp(am, bm),
                ord => ord,
            },
            ModuleExtension::SplitTag { split, tags } => {
                let (alow, blow) = (ac < *split, bc < *split);
                match (alow, blow) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (true, true) => match self.ring.cmp(am, bm) {
                        Ordering::Equal => bc.cmp(&ac),
                        ord => ord,
                    },
                    (false, false) => {
                        if let Some(tags) = tags {
                            let ka = am.mul(&tags[(ac - split) as usize]);
                            let kb = bm.mul(&tags[(bc - split) as usize]);
                            match self.ring.cmp(&ka, &kb) {
                                Ordering::Equal => bc.cmp(&ac),
                                ord => ord,
                            }
                        } else {
                            match self.ring.cmp(am, bm) {
                                Ordering::Equal => bc.cmp(&ac),
                                ord => ord,
                            }
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn local_order_has_one_on_top() {
        let ord = RingOrder::local(2);
        assert_eq!(ord.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[2, 0])), Ordering::Greater);
        // same degree falls back to grevlex
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        // kill x (position 0), keep y (position 1)
        let ord = RingOrder::eliminate(vec![0], vec![1]);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
        assert!(ord.is_global());
    }

    #[test]
    fn weighted_degrees() {
        let ord = RingOrder::WeightedGlobal(vec![2, 1]);
        // x has degree 2, y^3 degree 3
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[1, 0])), Ordering::Greater);
    }
}
