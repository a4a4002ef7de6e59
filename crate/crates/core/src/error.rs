use thiserror::Error;

/// Errors raised by the engine. Mathematical check failures are not errors;
/// they are reported through the various report types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order exceeds the cap of {cap} elements")]
    SizeLimit { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid fixture: {0}")]
    InvalidFixture(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("morphism is not in the fusion system: {0}")]
    NotInSystem(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
