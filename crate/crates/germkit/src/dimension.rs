use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

/// A vector-space dimension over C: a natural number or infinity. Infinite
/// dimensions are first-class values, never errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Dim {
    Finite(u64),
    #[serde(rename = "infinite")]
    Infinite,
}

impl Dim {
    pub fn is_finite(&self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Dim::Finite(n) => Some(*n),
            Dim::Infinite => None,
        }
    }

    pub fn checked_sub(&self, other: u64) -> Option<Dim> {
        match self {
            Dim::Finite(n) => n.checked_sub(other).map(Dim::Finite),
            Dim::Infinite => Some(Dim::Infinite),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(n) => s.serialize_u64(*n),
            Dim::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl From<u64> for Dim {
    fn from(n: u64) -> Self {
        Dim::Finite(n)
    }
}
