use std::fmt;

use thiserror::Error;

/// Where in an input document a parse error was detected.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseLocation {
    pub line: Option<usize>,
    pub column: Option<usize>,
    /// JSON path of the offending field, e.g. `cells[2][0]`.
    pub field: Option<String>,
}

impl fmt::Display for ParseLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(field) = &self.field {
            write!(f, " in `{field}`")?;
        }
        if let (Some(line), Some(column)) = (self.line, self.column) {
            write!(f, " at line {line}, column {column}")?;
        }
        Ok(())
    }
}

/// Errors raised by the builders, the matching engines and the polynomial routes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error{location}: {message}")]
    Parse {
        location: ParseLocation,
        message: String,
    },

    #[error("unsupported graph: {0}")]
    UnsupportedGraph(String),

    #[error("graph has no perfect matching, polynomial is empty")]
    EmptyPolynomial,

    #[error("brute-force cap exceeded: {0}")]
    CapExceeded(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse_field(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: ParseLocation {
                field: Some(field.into()),
                ..Default::default()
            },
            message: message.into(),
        }
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedGraph(msg.into())
    }
}
