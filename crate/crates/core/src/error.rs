use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the domain of a formula (genus too small, even degree, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Polynomial long division left a nonzero remainder.
    #[error("non-exact division: remainder {remainder}")]
    NonExactDivision { remainder: String },

    /// A Möbius sum was not divisible by its normalising factor.
    #[error("non-integer result: {numerator} is not divisible by {denominator}")]
    NonIntegerResult {
        numerator: String,
        denominator: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by the caller's input, as opposed to a broken
    /// internal invariant.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
