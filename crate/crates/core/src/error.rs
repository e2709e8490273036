use thiserror::Error;

/// Errors raised by the library.
///
/// The variants mirror the exit-status contract of the command line tool:
/// `Input` and `Validation` map to status 1, `Resource` to status 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    /// The operation is mathematically undefined for the given arguments.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("validation error: {0}")]
    Validation(String),

    /// A size guard tripped; `degree` is the degree being attempted, when there is one.
    #[error("resource error{}: {message}", degree.map(|d| format!(" at degree {d}")).unwrap_or_default())]
    Resource { degree: Option<usize>, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
