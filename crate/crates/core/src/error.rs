use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimensions must be even, got {rows}x{cols}")]
    OddDimension { rows: usize, cols: usize },

    #[error("Schatten exponent must lie in [1, inf], got {0}")]
    InvalidSchattenP(f64),

    #[error("{what} is not Hermitian (relative residual {residual:e})")]
    NotHermitian { what: &'static str, residual: f64 },

    #[error("matrix is not in the range of the embedding (relative residual {residual:e})")]
    NotInRange { residual: f64 },

    #[error("eigenvalues could not be paired into conjugates (mismatch {mismatch:e}, tolerance {tol:e})")]
    PairingFailure { mismatch: f64, tol: f64 },

    #[error("{algorithm} did not converge within {iterations} iterations")]
    NoConvergence {
        algorithm: &'static str,
        iterations: usize,
    },

    #[error("invalid kernel partition: {0}")]
    InvalidPartition(String),

    #[error("unknown builtin symbol `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("fiber reconstruction residual {residual:e} exceeds {tol:e}")]
    Reconstruction { residual: f64, tol: f64 },

    #[error("symbol document: {0}")]
    SymbolFormat(String),

    #[error("configuration field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Toml(#[from] toml::de::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config { field: field.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
