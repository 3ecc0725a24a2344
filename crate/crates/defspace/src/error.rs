use thiserror::Error;

/// Errors produced by parsing, validation and the combinatorial operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty defining graph")]
    EmptyGraph,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("simplex not in graph: {0}")]
    UnknownSimplex(String),
    #[error("defining graph is not connected")]
    Disconnected,
    #[error("defining graph is not large-type: edge {u}-{v} has label {label}")]
    NotLargeType { u: String, v: String, label: u32 },
    #[error("coefficient must be at least 3, got {0}")]
    CoefficientTooSmall(u32),
    #[error("edge {0} is not collapsible")]
    NotCollapsible(usize),
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("tree is not reduced")]
    NotReduced,
    #[error("enumeration exceeded the class cap of {cap} ({found} classes found)")]
    EnumerationOverflow { cap: usize, found: usize },
    #[error("graph too large for this operation: {vertices} vertices (limit {max})")]
    TooLarge { vertices: usize, max: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI reports for this error: 2 for inputs that
    /// parse but violate a structural constraint, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Disconnected | Error::NotLargeType { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
