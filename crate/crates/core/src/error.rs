//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A quadrature self-check exceeded its tolerance.
    #[error(
        "numerical accuracy: {check} residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
    )]
    NumericalAccuracy {
        check: &'static str,
        residual: f64,
        tolerance: f64,
    },

    /// A non-finite value showed up mid-integration.
    #[error("non-finite integrand value at (s, k) = ({s}, {k})")]
    NonFinite { s: f64, k: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
