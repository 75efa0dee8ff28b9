use std::time::Duration;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range for a hypergraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("edge {edge:?} is not a set of {uniformity} distinct vertices")]
    MalformedEdge { edge: Vec<usize>, uniformity: usize },

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("search exceeded its node budget of {0}")]
    NodeBudgetExceeded(u64),

    #[error("search exceeded its time budget of {0:?}")]
    TimeBudgetExceeded(Duration),

    #[error("verification failed for N = {vertex_count}: {detail}")]
    VerificationFailed { vertex_count: usize, detail: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
