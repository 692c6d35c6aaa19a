use thiserror::Error;

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("malformed A-number {0:?} (expected A followed by six digits)")]
    BadId(String),
    #[error("{0} is not bundled or cached and network access is disabled")]
    NotAvailableOffline(String),
    #[error("fetching {id} failed: {message}")]
    Network { id: String, message: String },
    #[error("b-file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("{id} has only {available} terms from index {from}, {needed} requested")]
    TooFewTerms {
        id: String,
        from: i64,
        needed: usize,
        available: usize,
    },
    #[error("{id} mismatch at index {index}: OEIS has {expected}, generator gives {got}")]
    Mismatch {
        id: String,
        index: i64,
        expected: String,
        got: String,
    },
    #[error("no generator registered for {0}")]
    UnknownGenerator(String),
}

pub type Result<T, E = OeisError> = std::result::Result<T, E>;
