//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An enumeration was requested beyond the configured cap.
    #[error("enumeration at n = {n} exceeds the configured cap of {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },

    /// A checked big-integer subtraction went negative. This signals an
    /// implementation bug, never a valid input.
    #[error("big-integer subtraction underflow: {0}")]
    SubtractionUnderflow(String),

    /// Textual input could not be parsed. `position` is the 1-based token index.
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    /// The two paths share no vertex in the standard offset configuration.
    #[error("paths share no common vertex in the standard configuration")]
    NoCommonVertex,

    /// No index satisfies the pivot conditions for the given pair.
    #[error("no valid pivot index for sigma = {sigma}, tau = {tau}")]
    NoValidPivot { sigma: String, tau: String },

    /// An inversion-transfer pass produced an output that violates its own
    /// invariants. Carries the full pass trace for diagnosis.
    #[error("internal consistency failure in inversion transfer: {detail}")]
    InternalConsistency { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
