use thiserror::Error;

use crate::validate::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid geometric type: {0}")]
    Invalid(ValidationReport),
}

impl CoreError {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        CoreError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}
