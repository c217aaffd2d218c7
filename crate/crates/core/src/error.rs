use std::io;

use thiserror::Error;

use crate::exact::mp::MpComplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation order exceeded: requested exponent {requested}, series exact only below {available}")]
    TruncationOrder { requested: i64, available: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    /// Successive pole estimates do not contract, typically because several
    /// poles share the minimal modulus.
    #[error("non-generic configuration: {0}")]
    NonGeneric(String),

    #[error("u has a pole at z = 0")]
    Pole,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("triple-sum table covers s <= {available}, need s <= {needed}")]
    Coverage { needed: u32, available: u32 },

    #[error("numerical failure: {reason} ({} partial roots)", partial.len())]
    NumericalFailure {
        reason: String,
        partial: Vec<MpComplex>,
    },

    #[error("insufficient order: {0}")]
    InsufficientOrder(String),

    #[error("inconsistent results: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache format version {found} is not supported (supported: {supported}); regenerate the cache with this version")]
    CacheVersion { found: String, supported: String },

    #[error("corrupt cache file: {0}")]
    CacheCorrupt(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
