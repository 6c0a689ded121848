use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed file {path} at byte {offset}: {message}")]
    Malformed {
        path: PathBuf,
        offset: u64,
        message: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("empty dataset: no eligible messages after filtering")]
    EmptyDataset,

    #[error("empty vocabulary after applying min_count")]
    EmptyVocab,

    #[error("token not in vocabulary: {0:?}")]
    TokenNotFound(String),

    #[error("training diverged: non-finite loss")]
    Divergence,

    #[error("zero vector has no direction for cosine similarity")]
    ZeroVector,

    #[error("emoji sets of the two matrices differ")]
    MismatchedEmojiSets,

    #[error("zero variance: Pearson correlation is undefined")]
    ZeroVariance,

    #[error("unresolvable timestamp: {0}")]
    BadTimestamp(String),

    #[error("checkpoint version mismatch: expected {expected}, found {found}")]
    VersionMismatch { expected: u32, found: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
