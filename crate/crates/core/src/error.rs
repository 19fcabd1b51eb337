//! Error types shared by every module.

use thiserror::Error;

/// Crate-wide error type. The `code` / `module` pair of the structured CLI
/// error objects is derived from the variant.
#[derive(Debug, Error)]
pub enum Error {
    /// Shape or index problems in the inputs (wrong matrix sizes, bad labels).
    #[error("structural error: {0}")]
    Structural(String),

    /// Input parsed but fails a mathematical validation (anticommutation,
    /// orthogonality, homomorphism, table orthogonality, ...).
    #[error("validation failed: {0}")]
    Validation(String),

    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal cross-check failed: the brute-force oracle and a closed
    /// form disagree, or a certified computation lost certification.
    #[error("oracle failure: {0}")]
    Oracle(String),

    /// File / JSON handling.
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Structural(_) => "structural",
            Error::Validation(_) => "validation",
            Error::Domain(_) => "domain",
            Error::Oracle(_) => "oracle",
            Error::Io(_) => "io",
        }
    }
}
