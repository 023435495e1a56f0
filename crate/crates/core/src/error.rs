use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact polynomial division: remainder is {remainder}")]
    InexactDivision { remainder: String },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial must be monic: {0}")]
    NotMonic(String),

    #[error("polynomial must have degree at least 1: {0}")]
    ConstantPolynomial(String),

    #[error("degree {found} exceeds bound {bound}")]
    DegreeViolation { found: usize, bound: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("degree forecast inconsistent: {0}")]
    ForecastInconsistency(String),

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    /// True for errors caused by the caller's input rather than a broken invariant.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::ConstantPolynomial(_)
                | Error::ZeroPolynomial
                | Error::NotMonic(_)
                | Error::InvalidBounds(_)
        )
    }
}
