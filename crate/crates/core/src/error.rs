use thiserror::Error;

/// A syntax error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }

    /// Shifts a position reported relative to a fragment into file coordinates.
    pub fn offset(mut self, line: usize, column_offset: usize) -> Self {
        if self.line == 1 {
            self.column += column_offset;
        }
        self.line += line - 1;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular (determinant is zero)")]
    Singular,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires rational entries: {0}")]
    NotRational(String),

    #[error("matrix {which} is not generic: {reason}")]
    NotGeneric { which: &'static str, reason: String },

    #[error("bound exceeded: {what} = {got} (limit {limit})")]
    BoundExceeded { what: &'static str, got: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("rule {lhs} -> {rhs} is not compatible with the monomial order: {term} is not smaller than the left side")]
    IncompatibleRule { lhs: String, rhs: String, term: String },

    #[error("presentation hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("rewrite system is not confluent: {0}")]
    NotConfluent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
