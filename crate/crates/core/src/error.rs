use thiserror::Error;

/// Errors reported by graph construction, parsing, and the enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },

    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("connectivity parameter k must be at least 1")]
    ZeroK,

    #[error("source and target coincide (vertex {0})")]
    SameEndpoints(usize),

    #[error("{what}: expected length {expected}, got {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid cut: {0}")]
    InvalidCut(&'static str),

    #[error("operation needs at least {min} vertices, graph has {n}")]
    TooFewVertices { min: usize, n: usize },

    #[error("arcs do not form a directed path in this orientation")]
    NotAPath,

    #[error("orientations belong to different graphs")]
    GraphMismatch,

    #[error("{what} is not {k}-arc-connected")]
    NotKConnected { what: &'static str, k: usize },

    #[error("{what} = {value} exceeds the brute-force limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid orientation string: {0}")]
    OrientationFormat(String),

    #[error("invalid degree sequence: {0}")]
    SequenceFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
