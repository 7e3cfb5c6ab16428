use std::fmt;

use thiserror::Error;

use crate::circuit::Gate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    BrokenChain(#[from] BrokenChain),

    #[error("unsupported placement: {0}")]
    Unsupported(String),

    #[error("cell at row {row}, column {column} is already occupied by {gate}")]
    Conflict { row: usize, column: usize, gate: Gate },

    #[error("{what} is {actual}, above the limit of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("variable {0} has no value at the evaluation point")]
    UnboundVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("substitution is cyclic through {0}")]
    CyclicBinding(String),

    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("expected {expected} bits, got {actual}")]
    BitLength { expected: usize, actual: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Why a column failed chain validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainFault {
    /// A multiply or add gate has no vertical signal arriving.
    MissingSource,
    /// A chain runs into another emitter before reaching its add gate.
    MissingSink,
    /// A chain is interrupted by a gate that does not pass its direction.
    BlockedBy(Gate),
    /// A chain starts but runs off the edge of the column.
    DanglingEmitter,
}

impl fmt::Display for ChainFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainFault::MissingSource => f.write_str("missing-source"),
            ChainFault::MissingSink => f.write_str("missing-sink"),
            ChainFault::BlockedBy(g) => write!(f, "blocked-by {g}"),
            ChainFault::DanglingEmitter => f.write_str("dangling-emitter"),
        }
    }
}

/// Column and row are 1-based, as they appear in the circuit text format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("broken chain in column {column} at row {row}: {fault}")]
pub struct BrokenChain {
    pub column: usize,
    pub row: usize,
    pub fault: ChainFault,
}
