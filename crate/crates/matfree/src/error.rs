//! Error type shared across the library.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("numerical breakdown in {what} at step {step}")]
    NumericalBreakdown { what: String, step: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dense kernel of size {n} exceeds the cap of {cap}; use a structured (SKI) operator")]
    DenseCapExceeded { n: usize, cap: usize },

    #[error("point {index} lies outside grid coverage in dimension {dim}: {value} not in [{lo}, {hi}]")]
    OutOfGrid {
        index: usize,
        dim: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("interpolation geometry is singular: {0}")]
    SingularGeometry(String),

    #[error("configuration error: {0}")]
    Config(String),
}
