//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by group, element and code operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidGroupSpec(String),

    #[error("invalid ring spec: {0}")]
    InvalidRingSpec(String),

    #[error("element syntax error at position {pos}: {msg}")]
    ElementSyntax { pos: usize, msg: String },

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("elements belong to different coefficient rings")]
    RingMismatch,

    #[error("operation unsupported over the integers: {0} (use the determinant path)")]
    UnsupportedOverIntegers(&'static str),

    #[error("group order {order} exceeds the dense matrix limit {limit}")]
    DenseLimitExceeded { order: usize, limit: usize },

    #[error("the zero element is neither a unit nor a zero-divisor")]
    ZeroElement,

    #[error("element is not a unit{}", gcd_text(.certificate))]
    NotAUnit { certificate: Option<String> },

    #[error("element is a unit; no check elements exist")]
    NotAZeroDivisor,

    #[error("check element is a unit; the check code is empty")]
    EmptyCheckCode,

    #[error("invalid submodule basis: {0}")]
    InvalidBasis(String),

    #[error("S*u is linearly dependent; maximal independent subset of S (listing indices): {independent:?}")]
    DependentBasis { independent: Vec<usize> },

    #[error("matrix has no right inverse: row rank {rank} < {rows} rows")]
    NoRightInverse { rank: usize, rows: usize },

    #[error("message space {space} exceeds the exact-enumeration cap 2^{cap_bits}; use the sampling estimator")]
    DistanceCapExceeded { space: String, cap_bits: u32 },

    #[error("invalid LDPC plan: {0}")]
    InvalidPlan(String),

    #[error("{0}")]
    InvalidArgument(String),
}

fn gcd_text(cert: &Option<String>) -> String {
    match cert {
        Some(g) => format!("; gcd certificate (a zero-divisor): {g}"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
