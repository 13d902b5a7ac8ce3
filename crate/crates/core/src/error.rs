use thiserror::Error;

/// Errors raised by graph construction, counting and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {order} outside supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("path length {k} outside 1..={max}")]
    PathLengthOutOfRange { k: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("graph is already hamiltonian")]
    AlreadyHamiltonian,

    #[error("graph is not maximally nonhamiltonian")]
    NotMaximallyNonhamiltonian,

    #[error("cycle uses no complement edge")]
    NoComplementEdge,

    #[error("invalid edge configuration: {0}")]
    InvalidEdgeConfig(String),

    #[error("identity {identity} violated: {lhs} != {rhs}")]
    IdentityViolation {
        identity: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("invalid shard {index}/{total}")]
    InvalidShard { index: u64, total: u64 },

    #[error("cannot merge reports: {0}")]
    ReportMismatch(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_order(order: usize, min: usize, max: usize) -> Result<()> {
    if order < min || order > max {
        return Err(Error::OrderOutOfRange { order, min, max });
    }
    Ok(())
}
