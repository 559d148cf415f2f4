//! Multi-precision discrete-log group arithmetic and the cryptographic
//! primitives built on it: El Gamal encryption, Schnorr signatures,
//! message-recovery signatures, issuance-key blinding, hashing/KDF, and
//! authenticated symmetric encryption.
//!
//! All values are immutable once constructed and safe to share across
//! tasks. Operations are pure given their randomness source; the
//! exponentiation tally lives in an injected [`ExpCounter`], never in
//! global state.

mod aead;
mod blinding;
mod counter;
mod element;
mod elgamal;
mod error;
mod group;
mod hash;
mod kdf;
mod params;
mod recovery;
mod rng;
mod scalar;
mod schnorr;
mod timewin;

pub use aead::{aead_open, aead_seal};
pub use blinding::{
    derive_issuance_public, derive_issuance_public_with, derive_issuance_secret,
    derive_issuance_secret_with,
};
pub use counter::ExpCounter;
pub use element::GroupElement;
pub use elgamal::{elgamal_decrypt, elgamal_encrypt, elgamal_encrypt_with, ElGamalCiphertext};
pub use error::{CryptoError, Result};
pub use group::{keygen, Group, KeyPair};
pub use hash::{encode_to_group, hash_to_scalar, scalar_from_digest, tagged_digest, tags};
pub use kdf::{kdf, SymKey};
pub use params::{GroupId, GroupParams};
pub use recovery::{nr_recover, nr_sign, nr_sign_with, RecoverySignature};
pub use rng::{RngSource, SecretRng};
pub use scalar::Scalar;
pub use schnorr::{schnorr_sign, schnorr_sign_with, schnorr_verify, SchnorrSignature};
pub use timewin::time_window;
