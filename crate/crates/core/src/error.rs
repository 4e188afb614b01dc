use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("matrix is singular (nullity {nullity})")]
    Singular { nullity: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency violated: {0}")]
    Internal(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
