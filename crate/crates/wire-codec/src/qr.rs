use base64::engine::general_purpose::URL_SAFE_NO_PAD;
use base64::Engine;
use group_crypto::Group;

use crate::error::{CodecError, Result};
use crate::{decode, encode, Message};

/// Binary capacity of a version-40 QR symbol; every presentation must fit.
pub const MAX_QR_BYTES: usize = 2953;

/// Encodes a message and wraps it as unpadded base64url for QR transport.
pub fn to_qr_text<M: Message>(msg: &M, group: &Group) -> Result<String> {
    let bytes = encode(msg, group);
    if bytes.len() > MAX_QR_BYTES {
        return Err(CodecError::BudgetExceeded {
            size: bytes.len(),
            budget: MAX_QR_BYTES,
        });
    }
    Ok(URL_SAFE_NO_PAD.encode(bytes))
}

/// Reverses [`to_qr_text`], rejecting text whose decoded size exceeds the
/// QR budget before attempting a structural parse.
pub fn from_qr_text<M: Message>(text: &str, group: &Group) -> Result<M> {
    let bytes = URL_SAFE_NO_PAD
        .decode(text.trim().as_bytes())
        .map_err(|_| CodecError::InvalidBase64)?;
    if bytes.len() > MAX_QR_BYTES {
        return Err(CodecError::BudgetExceeded {
            size: bytes.len(),
            budget: MAX_QR_BYTES,
        });
    }
    decode(&bytes, group)
}
