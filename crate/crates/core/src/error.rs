use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} enumeration refused: n = {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("undirected required: {0}")]
    UndirectedRequired(&'static str),

    #[error("refused: {0}")]
    Refused(String),

    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },

    #[error("triangle inequality violated in criterion {criterion} at ({u}, {v}) via {x}")]
    TriangleViolation {
        criterion: usize,
        u: usize,
        v: usize,
        x: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
