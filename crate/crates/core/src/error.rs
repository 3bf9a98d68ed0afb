use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("index {index} is outside the available data ({available})")]
    Range { index: i64, available: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("b-file indices not contiguous: expected {expected}, found {found} (line {line})")]
    Contiguity {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error("cannot reshape {count} entries at arity {arity}: {residue} entries left over after {rows} complete rows")]
    Reshape {
        count: usize,
        arity: usize,
        rows: usize,
        residue: usize,
    },

    #[error("invalid OEIS id `{0}` (expected `A` followed by six digits)")]
    InvalidId(String),

    #[error("offline cache miss for {id} in {dir}")]
    OfflineCacheMiss { id: String, dir: String },

    #[error("network error: {0}")]
    Network(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
