use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or expansion could not reach the requested accuracy.
    #[error("precision exhausted in {context}: estimated relative error {achieved:.3e} exceeds budget {budget:.1e}")]
    Precision {
        context: String,
        achieved: f64,
        budget: f64,
    },

    /// Finite-precision arithmetic overflowed.
    #[error("overflow in {0}")]
    Overflow(String),

    /// An iterative or adaptive numerical procedure failed.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
