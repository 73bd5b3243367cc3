use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] jackpos_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("corrupt cache file {path}, record {record}: {reason}")]
    CorruptCache {
        path: PathBuf,
        record: String,
        reason: String,
    },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("{check} supports n in 1..={max}, got n = {n}")]
    OutOfRange { check: String, n: usize, max: usize },

    #[error("bad parameter: {0}")]
    BadParam(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
