use std::fmt;
use std::io;

use thiserror::Error;

/// Position-tagged failure while reading a graph or an argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line, column, message: message.into() }
    }

    /// An error in a one-line argument.
    pub fn at(column: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(1, column, message)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] mixwalk_core::Error),
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("checkpoint {path}: partition {partition}: {reason}")]
    Checkpoint { path: String, partition: String, reason: String },
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// Process exit status: 2 precondition, 3 mismatch, 4 parse.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 4,
            CliError::Core(mixwalk_core::Error::BadCode(_)) => 4,
            CliError::Mismatch(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
