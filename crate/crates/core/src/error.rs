//! Crate error type.

use std::fmt;

/// Errors reported by transforms, norms and verification suites.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A Lebesgue exponent outside its admissible range.
    InvalidExponent { name: &'static str, value: f64, expected: &'static str },
    /// A domain parameter (hypergroup parameter, truncation, weight) is invalid.
    InvalidParameter(String),
    /// A quadrature rule cannot resolve the requested frequencies exactly.
    QuadratureResolution { required: u32, available: u32 },
    /// A multiplier symbol is undefined at a dual point in the function's support.
    SymbolUndefined { label: u32 },
    /// A summability condition on the dual diverges.
    DivergentCondition(String),
    /// Experiment configuration error (unknown key, bad value, empty suite list).
    Config(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidExponent { name, value, expected } => {
                write!(f, "exponent {name} = {value} outside {expected}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::QuadratureResolution { required, available } => write!(
                f,
                "quadrature resolves frequencies up to {available}, but {required} is required"
            ),
            Error::SymbolUndefined { label } => {
                write!(f, "multiplier symbol undefined at dual label {label}")
            }
            Error::DivergentCondition(msg) => write!(f, "divergent condition: {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
