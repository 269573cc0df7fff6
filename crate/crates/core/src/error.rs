use thiserror::Error;

use crate::basis::BasisSymbol;

/// Failure to parse the textual element format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in GF(5)")]
    DivisionByZero,

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("symbol {symbol} lies outside the window of radius {radius}")]
    OutsideWindow { symbol: BasisSymbol, radius: u64 },

    #[error("window radius must be at least {min}, got {got}")]
    WindowTooSmall { min: u64, got: u64 },

    #[error("unknown vector kind `{0}`")]
    UnknownKind(String),

    #[error("vector kind `{0}` takes two indices")]
    MissingSecondIndex(String),

    #[error("unknown map `{0}` (expected tau0, f, theta, sigma:<i> or tau:<j>)")]
    UnknownMap(String),
}
