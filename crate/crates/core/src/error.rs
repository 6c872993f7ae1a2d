use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
///
/// `InexactDivision` and `Consistency` indicate an internal invariant was
/// violated; the remaining variants are caller mistakes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division by (2x - 2*{divisor_root}): remainder {remainder}")]
    InexactDivision { divisor_root: String, remainder: String },

    #[error("{what} out of range: got {got}, allowed {allowed}")]
    OutOfRange {
        what: &'static str,
        got: String,
        allowed: String,
    },

    #[error("too many trees for k = {k}: Catalan({catalan_index}) = {count} exceeds the bound k <= {max_k}")]
    TreeBound {
        k: usize,
        max_k: usize,
        catalan_index: usize,
        count: String,
    },

    #[error("cycle-index enumeration is bounded by k <= {max_k} (got {k}); use elementary_symmetric instead")]
    EnumerationBound { k: usize, max_k: usize },

    #[error("power mismatch: pi^{left} vs pi^{right}")]
    PowerMismatch { left: u32, right: u32 },

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("invalid plane tree: {0}")]
    InvalidTree(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("sequence: {0}")]
    Sequence(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("consistency violation: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
