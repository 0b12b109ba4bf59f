use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}x{expected}, got {got}x{got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported matrix dimension {0} (only 2 and 4 are supported)")]
    UnsupportedDimension(usize),

    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),

    #[error("matrix trace is {0}, expected 1")]
    NotUnitTrace(f64),

    #[error("matrix has negative eigenvalue {0:.3e}")]
    NotPositive(f64),

    #[error("invalid Bell-diagonal state ({c1}, {c2}, {c3})")]
    InvalidBellState { c1: f64, c2: f64, c3: f64 },

    #[error("state is not Bell-diagonal (off-pattern Pauli component {0:.3e})")]
    NotBellDiagonal(f64),

    #[error("time must be non-negative, got {0}")]
    NegativeTime(f64),

    #[error("dephasing rate must be non-negative and finite, got {0}")]
    InvalidRate(f64),

    #[error("measurement strength must be non-negative, got {0}")]
    NegativeStrength(f64),

    #[error("measurement outcome has probability {0:.3e}; conditional state undefined")]
    ZeroProbability(f64),

    #[error(
        "optimizer did not converge: objective spread {spread:.3e} after {iterations} iterations"
    )]
    OptimizerFailure { spread: f64, iterations: usize },

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),

    #[error("time grid is too coarse: {0} points, need at least 5")]
    GridTooCoarse(usize),

    #[error("time grid is not uniform")]
    NonUniformGrid,
}

pub type Result<T> = std::result::Result<T, Error>;
