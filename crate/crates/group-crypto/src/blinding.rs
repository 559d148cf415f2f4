//! Per-record issuance keys derived by scalar blinding.
//!
//! The issuer signs each record under d_iss = sk + H_q(ot_id); anyone who
//! holds the issuer public key and the record's one-time identifier can
//! form the matching verification key y_iss = pk * g^{H_q(ot_id)} without
//! contacting the issuer. The two sides satisfy y_iss = g^{d_iss}.

use crate::element::GroupElement;
use crate::group::Group;
use crate::hash::{hash_to_scalar, tags};
use crate::scalar::Scalar;

fn blinding_scalar(group: &Group, ot_id: &[u8]) -> Scalar {
    hash_to_scalar(tags::ISSUANCE_BLIND, &[ot_id], group.params())
}

/// Issuer side: d_iss = (sk + H_q(ot_id)) mod q.
pub fn derive_issuance_secret(group: &Group, issuer_sk: &Scalar, ot_id: &[u8]) -> Scalar {
    derive_issuance_secret_with(group, issuer_sk, &blinding_scalar(group, ot_id))
}

/// Holder/verifier side: y_iss = pk * g^{H_q(ot_id)} mod p.
pub fn derive_issuance_public(group: &Group, issuer_pk: &GroupElement, ot_id: &[u8]) -> GroupElement {
    derive_issuance_public_with(group, issuer_pk, &blinding_scalar(group, ot_id))
}

pub fn derive_issuance_secret_with(group: &Group, issuer_sk: &Scalar, blind: &Scalar) -> Scalar {
    issuer_sk.add(blind, group.params())
}

pub fn derive_issuance_public_with(
    group: &Group,
    issuer_pk: &GroupElement,
    blind: &Scalar,
) -> GroupElement {
    group.mul(issuer_pk, &group.pow_g(blind))
}
