use thiserror::Error;

/// Errors raised by the chirality routines.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("side lengths must be finite and strictly positive, got ({0}, {1}, {2})")]
    InvalidSides(f64, f64, f64),
    #[error("perimeter of ({0}, {1}, {2}) overflows")]
    PerimeterOverflow(f64, f64, f64),
    #[error("relative tolerance must be finite and non-negative, got {0}")]
    InvalidTolerance(f64),
    #[error("resolution {got} is below the minimum of {min}")]
    ResolutionTooSmall { got: usize, min: usize },
    #[error("invalid noise specification: {0}")]
    InvalidNoise(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
