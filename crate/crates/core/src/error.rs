use thiserror::Error;

/// Everything that can go wrong while building or transforming an algebra.
///
/// Failed identities are not errors; they are reported through
/// [`CheckReport`](crate::report::CheckReport).
#[derive(Debug, Error)]
pub enum Error {
    #[error("position {position} out of range for a list of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("invalid index pair ({i}, {j}) for length {len}: need 1 <= i < j <= len")]
    InvalidPair { i: usize, j: usize, len: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    BasisIndexOutOfRange { index: usize, dim: usize },

    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),

    #[error("inconsistent skew orbit at {tuple:?}: expected {expected}, found {found}")]
    OrbitConflict {
        tuple: Vec<String>,
        expected: String,
        found: String,
    },

    #[error("grading violated at {tuple:?}: {detail}")]
    GradingViolation { tuple: Vec<String>, detail: String },

    #[error("map does not have declared parity {parity}: column {column} leaves the expected parity class")]
    ParityViolation { parity: u8, column: String },

    #[error("element is not homogeneous")]
    NonHomogeneous,

    #[error("twist family is not a single shared map")]
    NonUniformTwists,

    #[error("algebra is not multiplicative")]
    NotMultiplicative,

    #[error("expected an even {0}")]
    NotEven(&'static str),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("twist does not fix argument {index} ({label})")]
    FixedPointViolation { index: usize, label: String },

    #[error("map is singular")]
    Singular,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),

    #[error("parameter {name}: {detail}")]
    Parameter { name: String, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
