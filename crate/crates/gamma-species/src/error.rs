//! Error type shared by all series computations.

use thiserror::Error;

/// Errors raised by series construction and coefficient queries.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A dense stratum was requested beyond the configured degree cap and no
    /// fix oracle was available to answer the query in closed form.
    #[error("degree {degree} exceeds the dense-computation limit {limit} and no fix oracle is available (set GSPEC_MAX_DEGREE to raise the cap)")]
    DegreeLimit { degree: u32, limit: u32 },

    /// A recursive definition demanded a coefficient of itself at the same
    /// degree while that degree was still being computed.
    #[error("non-productive recursion: series `{series}` demands its own degree-{degree} stratum while computing it")]
    NonProductiveRecursion { series: String, degree: u32 },

    /// A placeholder series was queried before `define` installed its body.
    #[error("series `{series}` was used before being defined")]
    UndefinedPlaceholder { series: String },

    /// `define` was called on a series that is not an empty placeholder.
    #[error("series `{series}` is already defined")]
    AlreadyDefined { series: String },

    /// Plethystic composition with an inner series of nonzero constant term
    /// and an outer series of unbounded degree.
    #[error("composition undefined: {reason}")]
    CompositionUndefined { reason: String },

    /// Two group cycle index series over different groups were combined.
    #[error("group mismatch: {context}")]
    GroupMismatch { context: String },

    /// A group element was used with a group that does not contain it.
    #[error("element {element} does not belong to the group ({context})")]
    ElementNotInGroup { element: String, context: String },

    /// A generator passed to group construction has the wrong degree.
    #[error(
        "generator degree mismatch: generator acts on {found} points, group degree is {expected}"
    )]
    GeneratorDegreeMismatch { expected: usize, found: usize },

    /// An induced cycle count came out negative or non-integral, signalling
    /// an inconsistent group cycle index input.
    #[error("inconsistent induced cycle count: {context}")]
    InconsistentInducedCount { context: String },

    /// A counting series produced a non-integer where a count was expected.
    #[error("non-integer count: {context} evaluated to {value}")]
    NonIntegerCount { context: String, value: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
