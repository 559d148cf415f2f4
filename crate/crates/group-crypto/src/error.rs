use thiserror::Error;

/// Errors produced by the cryptographic layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CryptoError {
    #[error("group parameter validation failed: {0}")]
    InvalidGroupParams(&'static str),

    #[error("value is not a member of the prime-order subgroup")]
    NonMember,

    #[error("scalar encoding is not canonical for this group")]
    NonCanonicalScalar,

    #[error("element encoding is not canonical")]
    NonCanonicalElement,

    #[error("secret exponent must be nonzero")]
    ZeroSecret,

    #[error("opaque/unauthorized: authenticated decryption failed")]
    Opaque,

    #[error("time window width must be positive")]
    InvalidWindow,

    #[error("keystore error: {0}")]
    Keystore(String),
}

pub type Result<T> = std::result::Result<T, CryptoError>;
