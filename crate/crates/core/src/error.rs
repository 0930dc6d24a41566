use alloc::string::String;

/// Failures raised by the arithmetic and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configured effort or memory bound was exhausted before the
    /// computation could finish.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A decimal or `a/b` string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
