use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

/// A polynomial ring over Q, given by an ordered list of variable names and
/// optional positive integer weights. Rings are immutable and shared via Arc.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
    weights: Option<Vec<u64>>,
}

pub type RingRc = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<RingRc> {
        Self::with_weights(vars, None)
    }

    pub fn with_weights<S: Into<String>>(vars: Vec<S>, weights: Option<Vec<u64>>) -> Result<RingRc> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::Invalid("empty variable name".into()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::Invalid(format!("duplicate variable name `{v}`")));
            }
        }
        if let Some(w) = &weights {
            if w.len() != vars.len() {
                return Err(Error::Invalid("weight count differs from variable count".into()));
            }
            if w.iter().any(|&x| x == 0) {
                return Err(Error::Invalid("weights must be strictly positive".into()));
            }
        }
        Ok(Arc::new(Ring { vars, weights }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.vars[idx]
    }

    pub fn weights(&self) -> Option<&[u64]> {
        self.weights.as_deref()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Concatenation of two rings with disjoint variable sets.
    pub fn join(a: &RingRc, b: &RingRc) -> Result<RingRc> {
        let mut vars = a.vars.clone();
        vars.extend(b.vars.iter().cloned());
        Ring::new(vars)
    }

    /// Ring on a subset of this ring's variables, in the given position order.
    pub fn subring(&self, keep: &[usize]) -> Result<RingRc> {
        Ring::new(keep.iter().map(|&i| self.vars[i].clone()).collect())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(", "))
    }
}

/// Pointer-or-content ring identity check used all over the crate.
pub fn same_ring(a: &RingRc, b: &RingRc) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn ensure_same_ring(a: &RingRc, b: &RingRc, what: &str) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{what}: {a} vs {b}")))
    }
}
