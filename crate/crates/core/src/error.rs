use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} is outside 1..={MAX_VERTICES}")]
    VertexCount(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex {0} is not a member of the vertex set")]
    NotInSet(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    #[error("invalid double star pattern: {0}")]
    InvalidPattern(String),

    #[error("no theorem bounds are known for S_{{{m},{k}}}")]
    UnsupportedPattern { m: usize, k: usize },

    #[error("{0}")]
    OutOfRange(String),

    #[error("construction {family} failed self-verification: {reason}")]
    Verification { family: String, reason: String },

    #[error("cache: {0}")]
    Cache(String),
}
