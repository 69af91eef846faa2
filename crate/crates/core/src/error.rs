use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bound below geometric dimension: dim_bound {dim_bound} < {needed}")]
    BoundBelowGeometricDim { dim_bound: usize, needed: usize },

    #[error("not an inclusion: component at level {level} identifies simplices {a} and {b}")]
    NotAnInclusion { level: usize, a: u32, b: u32 },

    /// The stored levels do not reach far enough for the requested computation.
    #[error("truncation insufficient: need dim_bound >= {needed}, have {have}")]
    Truncation { needed: usize, have: usize },

    #[error("invalid simplicial structure: {0}")]
    Structure(String),

    #[error("maps do not compose: {0}")]
    Mismatch(String),

    #[error("permutation degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("invalid permutation: {0}")]
    BadPermutation(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("carrier too large for exhaustive enumeration: {size} > {cap}")]
    CarrierTooLarge { size: usize, cap: usize },

    #[error("constant term {0} is not a unit")]
    NonUnit(String),

    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("certificate failed at {location}: {reason}")]
    Certificate { location: String, reason: String },

    #[error("syntax error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cert_err(location: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Certificate {
        location: location.into(),
        reason: reason.into(),
    }
}
