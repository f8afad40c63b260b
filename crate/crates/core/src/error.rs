use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
}

/// Malformed graph6 / sparse6 / embedding JSON input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("graph is disconnected; face accounting needs a connected plane graph")]
    Disconnected,
    #[error("rotation at vertex {0} is not a permutation of its neighbors")]
    BadRotation(usize),
    #[error("outer face walk does not match any face of the embedding")]
    BadOuterFace,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("unknown pattern name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter for {name}: {reason}")]
    InvalidParameter { name: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("edge {0:?} is not incident with two 3-faces")]
    NotInEi(Edge),
    #[error("edge {0:?} is not an edge of the graph")]
    NoSuchEdge(Edge),
    #[error("the two 3-faces of edge {0:?} span only three vertices")]
    DegenerateTheta(Edge),
    #[error("edges {0:?} and {1:?} share an endpoint")]
    NotIndependent(Edge, Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("self-check failed for {family}: {reason}")]
    SelfCheck { family: String, reason: String },
    #[error("face is not a 4-face of the host")]
    NotFourFace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },
    #[error("corpus member {index} is not {pattern}-free")]
    NotPatternFree { index: usize, pattern: String },
    #[error("pattern {0} has no solid triangular-block catalog")]
    NoCatalog(String),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// Crate-level error, used where several subsystems meet (CLI, FFI).
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("graph is not planar")]
    NonPlanar,
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}
