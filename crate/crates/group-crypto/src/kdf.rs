use hkdf::Hkdf;
use sha2::Sha256;

/// 32-byte symmetric key derived for record confidentiality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymKey([u8; 32]);

impl SymKey {
    pub fn from_bytes(bytes: [u8; 32]) -> SymKey {
        SymKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }
}

/// HKDF-SHA-256 with empty salt and `context` as the info string.
pub fn kdf(ikm: &[u8], context: &[u8]) -> SymKey {
    let hk = Hkdf::<Sha256>::new(None, ikm);
    let mut okm = [0u8; 32];
    hk.expand(context, &mut okm)
        .expect("32 bytes is a valid HKDF-SHA256 output length");
    SymKey(okm)
}
