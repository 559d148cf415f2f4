use crate::element::GroupElement;
use crate::group::Group;
use crate::hash::{scalar_from_digest, tagged_digest, tags};
use crate::rng::SecretRng;
use crate::scalar::Scalar;

/// Schnorr signature: 32-byte challenge digest plus response scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchnorrSignature {
    pub c: [u8; 32],
    pub s: Scalar,
}

fn challenge(commitment: &GroupElement, msg: &[u8]) -> [u8; 32] {
    tagged_digest(tags::SCHNORR_CHALLENGE, &[&commitment.to_bytes(), msg])
}

/// c = H(g^k, msg); s = k + sk * c mod q (c read as a scalar).
pub fn schnorr_sign<R: SecretRng>(
    group: &Group,
    msg: &[u8],
    sk: &Scalar,
    rng: &mut R,
) -> SchnorrSignature {
    let k = group.sample_nonzero_scalar(rng);
    schnorr_sign_with(group, msg, sk, &k)
}

/// Deterministic variant with a caller-supplied commitment exponent.
pub fn schnorr_sign_with(group: &Group, msg: &[u8], sk: &Scalar, k: &Scalar) -> SchnorrSignature {
    let commitment = group.pow_g(k);
    let c = challenge(&commitment, msg);
    let e = scalar_from_digest(&c, group.params());
    let s = k.add(&sk.mul(&e, group.params()), group.params());
    SchnorrSignature { c, s }
}

/// Recomputes u = g^s * pk^{-e} and accepts iff H(u, msg) equals the
/// carried challenge. Two exponentiations.
pub fn schnorr_verify(
    group: &Group,
    msg: &[u8],
    sig: &SchnorrSignature,
    pk: &GroupElement,
) -> bool {
    let e = scalar_from_digest(&sig.c, group.params());
    let u = group.mul(&group.pow_g(&sig.s), &group.pow(pk, &e.neg(group.params())));
    challenge(&u, msg) == sig.c
}
