use thiserror::Error;

/// Errors shared across the kernel.
#[derive(Debug, Error)]
pub enum SchurError {
    #[error("generator index {i} out of range 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("subspace is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("map is not a bijection of basis sets: {0}")]
    NonBijective(String),
    #[error("invalid peak set: {0}")]
    InvalidPeaks(String),
    #[error("matrix is not a permutation matrix")]
    NotPermutation,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("consistency check failed: {0}")]
    CheckFailed(String),
    #[error("basis label cannot be serialized: {0}")]
    Unserializable(String),
}
