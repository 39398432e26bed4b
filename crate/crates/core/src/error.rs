use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("time point overflow while shifting by {shift}")]
    IntegerOverflow { shift: i64 },

    #[error("operation is undefined on the empty set")]
    EmptySet,

    #[error("invalid attribute symbol {0:?}")]
    InvalidAttribute(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate time point {time} at line {line}")]
    DuplicateTimePoint { time: i64, line: usize },

    #[error("unknown cell value {value:?} at line {line}, column {column}")]
    UnknownCellValue {
        value: String,
        line: usize,
        column: usize,
    },

    #[error("formula #{} of the theory is not predictive", index + 1)]
    NotPredictive { index: usize },

    #[error("query is not predictive")]
    NotPredictiveQuery,

    #[error("Max = {max} is smaller than u(A) = {upper}")]
    MaxTooSmall { max: i64, upper: i64 },

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("target {target} exceeds the configured cap {cap}")]
    CapExceeded { target: u64, cap: u64 },

    #[error("rule mismatch: {0}")]
    RuleMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_format_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::DuplicateTimePoint { .. }
                | Error::UnknownCellValue { .. }
                | Error::InvalidAttribute(_)
        )
    }
}
