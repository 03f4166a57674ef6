use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Text could not be parsed in the polynomial grammar.
    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },
    /// Certification failed at the configured maximum precision.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    /// A sign or comparison could not be decided at the configured maximum precision.
    #[error("undecided: {0}")]
    Undecided(String),
    /// The leading coefficient of a ball polynomial could not be separated from zero.
    #[error("indeterminate degree: leading coefficient ball contains zero")]
    IndeterminateDegree,
    /// A prime divides the conductor of the cyclotomic coefficient field.
    #[error("prime {p} is ramified in Q(zeta_{m})")]
    RamifiedPrime { p: u64, m: u64 },
    /// The auxiliary polynomial search did not meet its height bound.
    #[error("height bound unmet: best h(F) = {best_height}, bound = {bound}")]
    BoundUnmet { best_height: String, bound: String },
    /// An internal consistency check failed; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
