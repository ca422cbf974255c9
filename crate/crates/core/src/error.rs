use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph order must be positive")]
    EmptyOrder,

    #[error("order {order} exceeds the size cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("eigenvalue index {index} is out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("row sums do not match: expected {expected}, largest eigenvalue is {found}")]
    RowSumMismatch { expected: f64, found: f64 },

    #[error("eigensolver did not converge for order {order} within {iterations} iterations")]
    NoConvergence { order: usize, iterations: usize },

    #[error("exhaustive search over order {order} exceeds the cap of {cap}; pass the override to allow order {hard_cap}")]
    SearchCapExceeded { order: usize, cap: usize, hard_cap: usize },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
