use alloc::string::String;
use core::fmt;

/// Errors raised by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An instance is larger than the configured cap of an exhaustive method.
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    /// A search ran out of its budget before it could decide.
    BudgetExhausted,
    /// A supplied partition is not an `(r, l)`-partition of the graph.
    InvalidPartition(String),
    /// The input violates a precondition of the operation.
    Precondition(String),
    /// Bad vertex index or self-loop while building a graph.
    InvalidGraph(String),
    NotSplit,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapExceeded { what, value, cap } => {
                write!(f, "{what} is {value}, above the configured cap of {cap}")
            }
            Error::BudgetExhausted => f.write_str("undecided: search budget exhausted"),
            Error::InvalidPartition(why) => write!(f, "invalid partition: {why}"),
            Error::Precondition(why) => f.write_str(why),
            Error::InvalidGraph(why) => write!(f, "invalid graph: {why}"),
            Error::NotSplit => f.write_str("graph is not a split graph"),
        }
    }
}

impl core::error::Error for Error {}
