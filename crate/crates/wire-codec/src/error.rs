use thiserror::Error;

/// Decode and transport failures; each class is distinct so callers can
/// report them without inspecting strings.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("malformed frame: {0}")]
    Malformed(&'static str),

    #[error("unknown wire version {0:#04x}")]
    UnknownVersion(u8),

    #[error("wrong message type: expected {expected:#04x}, got {got:#04x}")]
    WrongType { expected: u8, got: u8 },

    #[error("non-canonical encoding: {0}")]
    NonCanonical(&'static str),

    #[error("group element failed subgroup membership")]
    Membership,

    #[error("encoded size {size} exceeds the {budget}-byte QR budget")]
    BudgetExceeded { size: usize, budget: usize },

    #[error("invalid base64url text")]
    InvalidBase64,
}

pub type Result<T> = std::result::Result<T, CodecError>;
