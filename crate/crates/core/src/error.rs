use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be at least {min}, got {got}")]
    InvalidDimension { min: usize, got: usize },
    #[error("state is not normalized: |psi|^2 = {0}")]
    NotNormalized(f64),
    #[error("zero-norm state cannot be normalized")]
    ZeroNorm,
    #[error("matrix is not Hermitian: residual {0}")]
    NotHermitian(f64),
    #[error("matrix is not positive semidefinite: eigenvalue {0}")]
    NotPositiveSemidefinite(f64),
    #[error("trace must be 1, got {0}")]
    BadTrace(f64),
    #[error("invalid mixture weights: {0}")]
    BadWeights(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("basis is not orthonormal: Gram residual {0}")]
    NotOrthonormal(f64),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("eigensolver failed to converge: off-diagonal residual {0}")]
    EigenConvergence(f64),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("state file error: {0}")]
    StateFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
