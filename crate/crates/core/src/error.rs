use thiserror::Error;

use crate::chordal::Hole;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} ({0}, {0})")]
    SelfLoop(usize),

    #[error("{n} vertices exceeds the ceiling of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("graph has {n} vertices; this operation is limited to {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed graph6 string: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("graph is not chordal; induced hole {:?}", .0.cycle)]
    NotChordal(Hole),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
