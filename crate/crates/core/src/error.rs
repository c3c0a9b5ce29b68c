use alloc::string::String;

use thiserror::Error;

use crate::count::BigCount;

/// Errors produced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("permutation degree must be positive")]
    EmptyDegree,

    #[error("image array is not a bijection of 0..{degree}")]
    NotBijection { degree: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("cycle notation error at byte {position}: {kind}")]
    Parse { position: usize, kind: ParseErrorKind },

    #[error("{what} exceeds cap: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: BigCount,
        cap: BigCount,
    },

    #[error("H is not a subgroup of G: generator {generator} does not sift")]
    NotSubgroup { generator: usize },

    #[error("element is not a member of the ambient group")]
    NotMember,

    #[error("group is not regular on the coset space")]
    NotRegular,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("generator {generator} is not an automorphism of the graph")]
    NonAutomorphism { generator: usize },

    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(&'static str),

    #[error("invalid coset graph triple: {0}")]
    InvalidCosetSpec(&'static str),

    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported group family: {0}")]
    UnsupportedFamily(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("label {label} outside 1..={degree}")]
    LabelOutOfRange { label: usize, degree: usize },
    #[error("label {0} repeated")]
    RepeatedLabel(usize),
    #[error("unbalanced parentheses")]
    Unbalanced,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("malformed number")]
    BadNumber,
}

pub type Result<T> = core::result::Result<T, Error>;
