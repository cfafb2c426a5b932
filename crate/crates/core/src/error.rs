use thiserror::Error;

use crate::quiver::ParseError;

pub type Result<T, E = HallError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HallError {
    /// An enumeration or search would exceed the configured object cap.
    #[error("capacity exceeded: {what} needs {needed} objects (cap {cap})")]
    Capacity {
        what: String,
        needed: u128,
        cap: u64,
    },
    /// Operands live over different quivers or fields, or have incompatible shapes.
    #[error("mismatch: {0}")]
    Mismatch(String),
    /// The operation is not defined for this category (e.g. Loewy data of a
    /// non-nilpotent representation of a cyclic quiver).
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl HallError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        HallError::Invalid(msg.into())
    }

    pub fn mismatch(msg: impl Into<String>) -> Self {
        HallError::Mismatch(msg.into())
    }

    pub fn unsupported(msg: impl Into<String>) -> Self {
        HallError::Unsupported(msg.into())
    }

    pub fn is_capacity(&self) -> bool {
        matches!(self, HallError::Capacity { .. })
    }
}
