use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("exact division failed: not divisible")]
    NotDivisible,

    #[error("division by zero")]
    DivisionByZero,

    /// A configured cap (pair degree, resolution steps, jet degree, wall
    /// clock) was exceeded. Never a wrong answer, always an explicit abort.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("germ is not finite: {0}")]
    NotFinite(String),

    /// Piene division did not go through; the lemma presupposes a finite,
    /// generically one-to-one germ, so failure is the detection signal.
    #[error("Piene division failed, germ not certified generically one-to-one: {0}")]
    NotGenericallyOneToOne(String),

    #[error("inclusion violated: {0}")]
    InclusionViolated(String),

    #[error("elimination ideal is not principal: {0}")]
    NotPrincipal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
