//! Error type shared by the whole crate.
//!
//! Structural misuse (mismatched ranks, out-of-range generator indices, ...)
//! panics; everything a correct caller can still run into on valid-looking
//! data comes back as an [`Error`].

use thiserror::Error;

/// Errors produced by exact arithmetic, parsing and the verification layer.
#[derive(Debug, Error)]
pub enum Error {
    /// Division of rational functions by zero.
    #[error("division by zero in Q(q)")]
    DivisionByZero,

    /// Evaluation of a rational function at a pole.
    #[error("pole at q = {point}")]
    Pole { point: String },

    /// Malformed text input; `position` is a byte offset into the input.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// Part lists that are not weakly decreasing positive integers.
    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    /// A filling that is not a standard tableau.
    #[error("invalid standard tableau: {reason}")]
    InvalidTableau { reason: String },

    /// One-line images that are not a bijection.
    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    /// Shape outside the (m,n)-hook family.
    #[error("partition {lambda} is not an ({m},{n})-hook shape")]
    NotHook { lambda: String, m: usize, n: usize },

    /// Row/column group enumeration would exceed the configured guard.
    #[error("row/column group of order {order} exceeds the guard bound {bound}")]
    GroupGuardExceeded { order: u128, bound: u128 },

    /// Tensor space too large for the configured bound.
    #[error(
        "tensor space dimension {dim} exceeds the bound {bound}; \
         raise it with --bound or QSCHUR_BOUND"
    )]
    DimensionBoundExceeded { dim: u128, bound: u128 },

    /// Weight requested for a vector mixing two different contents.
    #[error("vector is not weight homogeneous: contents {first:?} and {second:?} both occur")]
    InhomogeneousWeight { first: Vec<i64>, second: Vec<i64> },

    /// The quasi-idempotent scalar could not be extracted consistently.
    #[error("xi extraction failed for tableau {tableau}: {reason}")]
    XiExtraction { tableau: String, reason: String },

    /// A highest weight vector failed one of its certificate checks.
    #[error("highest weight certificate failed for tableau {tableau}: {reason}")]
    CertificateFailed { tableau: String, reason: String },

    /// An exact decomposition identity failed to hold.
    #[error("decomposition mismatch: {reason}")]
    DecompositionMismatch { reason: String },
}

impl Error {
    /// Convenience constructor for parse errors.
    pub fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
