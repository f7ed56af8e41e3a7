use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A dart-permutation structure violates a map invariant.
    #[error("invalid map: {0}")]
    InvalidMap(String),

    /// A tangle (bounded quadrangulation) violates the named invariant.
    #[error("invalid tangle: {0}")]
    InvalidTangle(&'static str),

    /// Arguments outside the domain of a formula or operation.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A configured size cap would be exceeded.
    #[error("size limit for {what}: requested {requested}, cap {cap}")]
    SizeLimit {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    /// Rejection sampling exhausted its budget.
    #[error("rejection budget exhausted after {tries} tries ({accepted} accepted)")]
    RejectionBudget { tries: u64, accepted: u64 },

    /// The diagram is outside the class an operation is defined on.
    #[error("classification error: {0}")]
    Classification(String),

    /// Malformed input text (PD codes, CSV, JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
