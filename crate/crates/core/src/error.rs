use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad failure class, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input text.
    Parse,
    /// The caller asked for something outside an operation's domain.
    Precondition,
    /// An exact identity that must hold did not; indicates a bug.
    Consistency,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge {edge} endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("operation requires a {expected} graph")]
    Orientation { expected: &'static str },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has {count} {what}, above the subset limit of {limit}")]
    SubsetLimit {
        what: &'static str,
        count: usize,
        limit: usize,
    },

    #[error("cycle length must be at least 1")]
    ZeroLength,

    #[error("truncation order {order} is below the edge count {edges}")]
    OrderTooSmall { order: usize, edges: usize },

    #[error("power series precondition violated: {0}")]
    Series(&'static str),

    #[error("omega({0}) is not available in the census table")]
    MissingOmega(usize),

    #[error("oracle would visit about {estimate} partial walks, above the cap of {cap}")]
    OracleCap { estimate: u128, cap: u128 },

    #[error("not integral: {0}")]
    NonIntegral(String),

    #[error("covering class {0:?} is a rotation of its own inverse")]
    SelfInverseClass(Vec<usize>),

    #[error("routes disagree: {0}")]
    RouteDisagreement(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::VertexOutOfRange { .. } => ErrorKind::Parse,
            Error::Orientation { .. }
            | Error::Disconnected
            | Error::SubsetLimit { .. }
            | Error::ZeroLength
            | Error::OrderTooSmall { .. }
            | Error::Series(_)
            | Error::MissingOmega(_)
            | Error::OracleCap { .. } => ErrorKind::Precondition,
            Error::NonIntegral(_) | Error::SelfInverseClass(_) | Error::RouteDisagreement(_) => {
                ErrorKind::Consistency
            }
        }
    }
}
