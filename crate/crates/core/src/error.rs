//! Error type shared by every module of the engine.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: unknown type letter, bad rank, wrong weight length.
    #[error("usage error: {0}")]
    Usage(String),

    /// A configured enumeration budget would be exceeded.
    #[error("resource budget exceeded: {what} requires {requested}, budget is {limit}")]
    Resource {
        what: String,
        requested: u128,
        limit: u128,
    },

    /// A division that should have been exact left a remainder.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// The input lies outside the domain on which the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two computations that must agree did not; indicates a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn resource(what: impl Into<String>, requested: u128, limit: u128) -> Self {
        Error::Resource {
            what: what.into(),
            requested,
            limit,
        }
    }
}
