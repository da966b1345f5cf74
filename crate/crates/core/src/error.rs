use thiserror::Error;

/// Errors raised by space construction, parsing and the constructive operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point count {0} outside 1..=16")]
    PointCount(usize),
    #[error("duplicate point name `{0}`")]
    DuplicatePoint(String),
    #[error("invalid point name `{0}`")]
    InvalidPointName(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("subset {0:#x} references points outside the space")]
    SubsetOutOfRange(u32),
    #[error("duplicate open set {0}")]
    DuplicateOpen(String),
    #[error("opens not closed under union: {0} and {1}")]
    NotUnionClosed(String, String),
    #[error("opens not closed under intersection: {0} and {1}")]
    NotIntersectionClosed(String, String),
    #[error("product of {left} and {right} points exceeds 16")]
    ProductTooLarge { left: usize, right: usize },
    #[error("{variant}-closure of {set} is not {variant}-closed")]
    ClosureUnstable { variant: String, set: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("bound exceeded: n = {n}, limit {limit}")]
    BoundExceeded { n: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
