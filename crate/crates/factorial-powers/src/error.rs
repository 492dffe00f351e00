use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A configured resource limit (factorial guard, scan budget) was hit.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A result left the representable range at the working precision.
    #[error("range error: {0}")]
    Range(String),

    /// Malformed input or an unknown name.
    #[error("usage error: {0}")]
    Usage(String),

    /// A predicate was still undecided at the maximum working precision.
    /// Carries the final precision and the enclosure that straddled.
    #[error("unresolved at {bits} bits: {detail}")]
    Unresolved { bits: usize, detail: String },

    /// A claim that the toolkit certifies was contradicted by computation.
    #[error("falsified: {0}")]
    Falsified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
