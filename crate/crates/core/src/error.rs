use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected a {expected}x{expected} matrix, got {actual}x{actual}")]
    WrongDimension { expected: usize, actual: usize },

    #[error("a {dim}x{dim} matrix needs {expected} entries, got {actual}")]
    EntryCount {
        dim: usize,
        expected: usize,
        actual: usize,
    },

    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not Hermitian (residual {0:e})")]
    NotHermitian(f64),

    #[error("negative discriminant {0:e}")]
    NegativeDiscriminant(f64),

    #[error("negative eigenvalue {0:e}")]
    NegativeEigenvalue(f64),

    #[error("Bloch vector length {length} exceeds 1 by {excess:e}")]
    BlochTooLong { length: f64, excess: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("retention rate x = {0} is outside [0, 1]")]
    RetentionOutOfRange(f64),

    #[error("Kraus set is incomplete (completeness residual {0:e})")]
    IncompleteChannel(f64),

    #[error("channel has no Kraus operators")]
    EmptyChannel,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
