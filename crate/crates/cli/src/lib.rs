//! Command implementations and JSON/CSV codecs for the `selfinv` binary.
//!
//! Every command reads JSON on stdin and writes JSON on stdout except
//! `sweep`, which writes a CSV grid to a file. Output key order is fixed so
//! identical inputs produce byte-identical outputs. Exit codes are part of
//! the contract: 0 ok, 1 parse failure, 2 validation failure, 3 violated
//! precondition, 4 io failure.

pub mod commands;
pub mod json;
pub mod sweep;

use std::fmt;

/// Command-layer error carrying the exit-code class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input: bad JSON, wrong shape, non-integer entries.
    Parse(String),
    /// Structurally sound input that violates a symmetry or schema
    /// constraint.
    Validate(String),
    /// Valid input outside an operation's precondition.
    Precondition(String),
    /// Filesystem failure.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validate(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Validate(msg) => write!(f, "validation error: {msg}"),
            CliError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<selfinv::Error> for CliError {
    fn from(err: selfinv::Error) -> Self {
        use selfinv::Error::*;
        match err {
            InvalidForm(_) | WrongSpace(_) | ParityMismatch | InvalidDenominator => {
                CliError::Validate(err.to_string())
            }
            DivisionByZero
            | NotMonic
            | LeadingCoefficientZero
            | DegreeTooSmall
            | NotDivisible
            | ZeroDiscriminant
            | NoConvergence { .. }
            | RepeatedAngles
            | AngleSumNonzero
            | NonFinite => CliError::Precondition(err.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
