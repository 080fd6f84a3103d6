use thiserror::Error;

use crate::recognition::Obstruction;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation that needs an interval graph was handed something else.
    #[error("not an interval graph: {0}")]
    NotInterval(Box<Obstruction>),

    #[error("oracle refuses graphs on {n} vertices (bound is {bound})")]
    OracleBound { n: usize, bound: usize },

    /// Two independent routes disagreed, or a constructed certificate failed
    /// its own re-check. Always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
