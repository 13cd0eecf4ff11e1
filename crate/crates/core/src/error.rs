use thiserror::Error;

use crate::rational::ArithmeticOverflow;

/// Errors surfaced by the library. The CLI maps these onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {0} vertices; capacity is {max}", max = crate::graph::MAX_VERTICES)]
    Capacity(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("no such vertex {0}")]
    NoSuchVertex(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("search budget of {0} states exceeded")]
    BudgetExceeded(u64),
    #[error("{n} vertices is over the limit of {limit} for this operation")]
    SizeLimit { n: usize, limit: usize },
    #[error(transparent)]
    Overflow(#[from] ArithmeticOverflow),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
