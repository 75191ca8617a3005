//! Error type shared by all cut-ideal operations.

use thiserror::Error;

/// Errors produced by graph construction, ideal arithmetic, and the
/// homological oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph family: {0}")]
    InvalidFamily(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid vertex subset: vertex {0} is not a vertex of the graph")]
    InvalidSubset(u32),

    #[error("ambient ring mismatch: {0} edges vs {1} edges")]
    RingMismatch(usize, usize),

    #[error("a monomial ideal needs at least one generator")]
    EmptyIdeal,

    #[error("exponent overflow: product leaves the supported exponent range")]
    ExponentOverflow,

    #[error("power exponent must be at least 1, got {0}")]
    InvalidExponent(usize),

    #[error("{0} is not prime")]
    InvalidField(u64),

    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("generators are not all of the same degree")]
    NotEquigenerated,

    #[error("undefined on an empty Betti table")]
    EmptyTable,

    #[error("invalid pair: {0} is not an element of the given subset")]
    InvalidPair(u32),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("the input graph is not a standard labeled cycle")]
    NotACycle,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
