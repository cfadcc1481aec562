use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The merge callback of a mixable shuffle has no value on this pair.
    #[error("merge undefined for atoms {left} and {right}")]
    MergeUndefined { left: String, right: String },

    #[error("precision unreachable: {0}")]
    PrecisionUnreachable(String),

    #[error("divergent series: {0}")]
    Divergent(String),

    #[error("polynomial degree {degree} exceeds table order {order}")]
    DegreeOverflow { degree: u32, order: usize },

    /// Raised by a caller-supplied Rota-Baxter target.
    #[error("target error: {0}")]
    Target(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
