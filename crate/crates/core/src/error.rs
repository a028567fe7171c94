use alloc::boxed::Box;
use alloc::string::String;

use crate::algebra::{IdentityReport, Kind};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("{what} failed validation ({})", report.identity)]
    Validation {
        what: String,
        report: Box<IdentityReport>,
    },

    #[error("expected a {expected} algebra, found {found}")]
    KindMismatch { expected: Kind, found: Kind },

    #[error("algebra {0:?} has no unit")]
    NotUnital(String),

    #[error("Lie algebra is not perfect: [g,g] has rank {rank}, dim g = {dim}")]
    NotPerfect { rank: usize, dim: usize },

    #[error("relations collapse the unit to zero")]
    DegenerateQuotient,

    #[error("{0}")]
    Untagged(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource guard: {what} = {size} exceeds limit {limit}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("not a triple-system homomorphism ({})", report.identity)]
    NotTripleHomomorphism { report: Box<IdentityReport> },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
