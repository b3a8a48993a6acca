//! Error type shared by the enumeration core.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Dimension or prime mismatch between exact matrices.
    Shape(String),
    /// A lattice escaped the requested window; the caller should retry with a
    /// larger window or higher precision.
    WindowEscape { needed: u32, window: u32 },
    /// A quantity failed to stabilize between two consecutive precision
    /// levels, or one of the dual-route computations disagreed.
    Instability(String),
    /// A brute-force oracle contradicted the main computation. This is a hard
    /// failure: it indicates a bug, not a precision problem.
    OracleMismatch(String),
    /// Invalid configuration or input data.
    Invalid(String),
    /// Square roots are only lifted at odd primes.
    EvenPrime,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(s) => write!(f, "shape mismatch: {s}"),
            Error::WindowEscape { needed, window } => {
                write!(f, "window escape: need exponent {needed}, window {window}")
            }
            Error::Instability(s) => write!(f, "instability: {s}"),
            Error::OracleMismatch(s) => write!(f, "oracle mismatch: {s}"),
            Error::Invalid(s) => write!(f, "invalid input: {s}"),
            Error::EvenPrime => write!(f, "square roots mod 2^m are not supported"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
