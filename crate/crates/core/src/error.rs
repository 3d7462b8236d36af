use thiserror::Error;

use crate::zeros::ComplexPoint;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("variable {0} has no image in the substitution map")]
    UnmappedVariable(usize),

    #[error("polynomial is not exactly divisible by the given divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid polynomial JSON: {0}")]
    Json(String),

    #[error("coefficient {0} does not fit in a double")]
    Overflow(String),

    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence {
        iterations: usize,
        best: Vec<ComplexPoint>,
    },

    #[error("parametrization has a pole at t = {0}")]
    Pole(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("identity `{identity}` violated at n = {n}: {detail}")]
    IdentityViolation {
        identity: String,
        n: u64,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for an [`Error::IdentityViolation`].
pub fn violation(identity: &str, n: u64, detail: impl Into<String>) -> Error {
    Error::IdentityViolation {
        identity: identity.to_string(),
        n,
        detail: detail.into(),
    }
}

/// `Ok(())` when `cond` holds, otherwise a violation built lazily.
pub fn ensure<F, S>(cond: bool, identity: &str, n: u64, detail: F) -> Result<()>
where
    F: FnOnce() -> S,
    S: Into<String>,
{
    if cond {
        Ok(())
    } else {
        Err(violation(identity, n, detail()))
    }
}
