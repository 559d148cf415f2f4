use chacha20poly1305::aead::{Aead, Payload};
use chacha20poly1305::{ChaCha20Poly1305, Key, KeyInit, Nonce};

use crate::error::{CryptoError, Result};
use crate::kdf::SymKey;

/// ChaCha20-Poly1305 (RFC 8439), fixed for cross-implementation interop.
/// The nonce must be unique per key; callers carry it alongside the
/// ciphertext.
pub fn aead_seal(key: &SymKey, nonce: &[u8; 12], plaintext: &[u8], ad: &[u8]) -> Vec<u8> {
    let cipher = ChaCha20Poly1305::new(&Key::from(*key.as_bytes()));
    cipher
        .encrypt(
            &Nonce::from(*nonce),
            Payload {
                msg: plaintext,
                aad: ad,
            },
        )
        .expect("chacha20poly1305 encryption is infallible for in-memory sizes")
}

/// All-or-nothing open: any mismatch in key, nonce, ciphertext, or
/// associated data yields the opaque/unauthorized error and no plaintext.
pub fn aead_open(key: &SymKey, nonce: &[u8; 12], ciphertext: &[u8], ad: &[u8]) -> Result<Vec<u8>> {
    let cipher = ChaCha20Poly1305::new(&Key::from(*key.as_bytes()));
    cipher
        .decrypt(
            &Nonce::from(*nonce),
            Payload {
                msg: ciphertext,
                aad: ad,
            },
        )
        .map_err(|_| CryptoError::Opaque)
}
