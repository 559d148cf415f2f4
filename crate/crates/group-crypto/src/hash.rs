use num_bigint::BigUint;
use sha2::{Digest, Sha256};

use crate::element::GroupElement;
use crate::group::Group;
use crate::params::GroupParams;
use crate::scalar::Scalar;

/// Domain-separation tags; every hashing call site uses a distinct one.
pub mod tags {
    pub const ISSUANCE_BLIND: &[u8] = b"healthpass/v1/issuance-blind";
    pub const SCHNORR_CHALLENGE: &[u8] = b"healthpass/v1/schnorr-challenge";
    pub const RECOVERY_CHALLENGE: &[u8] = b"healthpass/v1/recovery-challenge";
    pub const ENCODE_TO_GROUP: &[u8] = b"healthpass/v1/encode-to-group";
    pub const RESULT_KEY: &[u8] = b"healthpass/v1/result-key";
}

/// SHA-256 over a tag and length-prefixed parts. The 4-byte big-endian
/// length before each part keeps variable-length inputs unambiguous.
pub fn tagged_digest(tag: &[u8], parts: &[&[u8]]) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(tag);
    hasher.update([0u8]);
    for part in parts {
        hasher.update((part.len() as u32).to_be_bytes());
        hasher.update(part);
    }
    hasher.finalize().into()
}

/// Interprets a 32-byte digest as a big-endian integer reduced mod q.
pub fn scalar_from_digest(digest: &[u8; 32], params: &GroupParams) -> Scalar {
    Scalar::reduce(BigUint::from_bytes_be(digest), params)
}

/// H_q: hash-to-scalar with domain separation.
pub fn hash_to_scalar(tag: &[u8], parts: &[&[u8]], params: &GroupParams) -> Scalar {
    scalar_from_digest(&tagged_digest(tag, parts), params)
}

/// Deterministically maps arbitrary bytes into the subgroup as
/// g^{H_q(data)}. One exponentiation.
pub fn encode_to_group(group: &Group, data: &[u8]) -> GroupElement {
    let e = hash_to_scalar(tags::ENCODE_TO_GROUP, &[data], group.params());
    group.pow_g(&e)
}
