use thiserror::Error;

/// Errors raised by graph construction, ideal arithmetic and the invariant
/// routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("malformed edge list at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("the zero ideal has no generators")]
    ZeroIdeal,

    #[error("prime power over an empty variable set")]
    EmptyVariables,

    #[error("bound exceeded: {what} has size {size}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("unsupported family for {0}")]
    UnsupportedFamily(String),

    #[error("invalid monomial literal {literal:?}: {msg}")]
    MonomialLiteral { literal: String, msg: String },

    #[error("vector length {got} does not match {expected} vertices")]
    VectorLength { got: usize, expected: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
