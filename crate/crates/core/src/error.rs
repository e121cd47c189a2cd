use alloc::string::String;
use alloc::vec::Vec;

/// Everything that can go wrong inside the core.
///
/// The variants fall into three families that callers are expected to keep
/// apart: malformed input (`NotDominant`, `LengthMismatch`, ...), resource
/// exhaustion (`ResourceCap`), and mathematical inconsistency
/// (`Inconsistency`, `RouteMismatch`), which signals a bug in the
/// implementation rather than a bad request.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("weight {parts:?} is not dominant (parts must be nonincreasing)")]
    NotDominant { parts: Vec<i64> },

    #[error("weight {parts:?} is not a partition")]
    NotAPartition { parts: Vec<i64> },

    #[error("expected a vector of length {expected}, found length {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is not symmetric: weight {weight:?} and its sorted form differ in coefficient")]
    NotSymmetric { weight: Vec<u32> },

    #[error("polynomial is not a character: multiplicity at {weight:?} went negative")]
    NotACharacter { weight: Vec<u32> },

    #[error("weight {lambda:?} lies outside the declared window")]
    OutsideWindow { lambda: Vec<i64> },

    #[error("resource cap exceeded in {what}: needs {needed}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: u128,
        cap: u64,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("routes disagree at {lambda:?}: {left} vs {right}")]
    RouteMismatch {
        lambda: Vec<i64>,
        left: i64,
        right: i64,
    },
}

impl Error {
    /// True for errors that indicate the implementation refuted itself.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::Inconsistency(_) | Error::RouteMismatch { .. } | Error::NotACharacter { .. }
        )
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}

pub type Result<T> = core::result::Result<T, Error>;
