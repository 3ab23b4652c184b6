use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    Range { vertex: usize, n: usize },

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("edge {0:?} repeats a vertex")]
    MalformedEdge(Vec<usize>),

    #[error("edge {0:?} appears more than once")]
    DuplicateEdge(Vec<usize>),

    #[error("degree is only defined for vertex sets of size 1 or 2, got {0}")]
    UnsupportedDegreeOrder(usize),

    #[error("needs at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("pattern graph has {0} vertices; at most 8 are supported")]
    FTooLarge(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("bad arguments: {0}")]
    BadArguments(String),
}
