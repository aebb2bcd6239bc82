use thiserror::Error;

/// Errors raised by the algebra kernel and the problem-file front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text that does not follow the monomial, polynomial or problem grammar.
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Operands living in different rings, variable lists or fields.
    #[error("context mismatch: {0}")]
    Context(String),

    /// An operation applied outside its domain, e.g. quotient by a non-divisor.
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed input data such as duplicate monomials or an all-zero generating set.
    #[error("invalid input: {0}")]
    Input(String),

    /// A caller broke a documented precondition (e.g. asked whether a
    /// non-autoreduced set is a Janet basis).
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
