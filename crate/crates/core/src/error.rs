use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate document id `{0}`")]
    DuplicateDocument(String),

    #[error("invalid term: {0}")]
    InvalidTerm(String),

    #[error("doubleton requires two different terms, got `{0}` twice")]
    IdenticalTerms(String),

    #[error("snippet window {0} is outside [1, 50]: a snippet holds at most 50 words on each side of the term")]
    WindowOutOfRange(usize),

    #[error("per-document snippet limit must be at least 1")]
    InvalidLimit,

    #[error("snippet list is empty")]
    EmptySnippetList,

    #[error("snippet from `{0}` has no words")]
    EmptySnippet(String),

    #[error("context has no words left after stopword removal")]
    EmptyContext,

    #[error("word list is empty")]
    EmptyWordList,

    #[error("micro-cluster has no vertices")]
    EmptyCluster,

    #[error("tree is not a sub-cluster of the micro-cluster: {0}")]
    NotASubcluster(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    #[error("threshold must be non-negative, got {0}")]
    NegativeAlpha(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: file is not valid UTF-8")]
    InvalidUtf8 { path: PathBuf },

    #[error("{path}:{line}: {message}")]
    Jsonl {
        path: PathBuf,
        line: usize,
        message: String,
    },
}
