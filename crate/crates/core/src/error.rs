//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two partitions that must partition the same integer do not.
    #[error("size mismatch: |{left}| = {left_size} but |{right}| = {right_size}")]
    SizeMismatch {
        left: String,
        left_size: u64,
        right: String,
        right_size: u64,
    },

    /// A computation would exceed a resource guard.
    #[error("resource budget exceeded: {what} (limit {limit}, requested {requested})")]
    Resource {
        what: &'static str,
        limit: u64,
        requested: u64,
    },

    /// Parameters outside the set for which an exact result is available.
    #[error("unsupported parameters: {what}; available: {available}")]
    Unsupported { what: String, available: String },

    /// A structurally invalid input (e.g. parts not non-increasing).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A precondition of a formula is violated (names the hypothesis).
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}
