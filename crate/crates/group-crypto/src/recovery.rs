use crate::element::GroupElement;
use crate::group::Group;
use crate::hash::{hash_to_scalar, tags};
use crate::rng::SecretRng;
use crate::scalar::Scalar;

/// Nyberg-Rueppel-style message-recovery signature over a group element.
///
/// The verifier recovers the signed element from (r, s) and the signer's
/// public key; authenticity comes from redundancy checks on the recovered
/// element performed by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoverySignature {
    pub r: GroupElement,
    pub s: Scalar,
}

fn recovery_challenge(group: &Group, r: &GroupElement, aux: &[u8]) -> Scalar {
    hash_to_scalar(tags::RECOVERY_CHALLENGE, &[&r.to_bytes(), aux], group.params())
}

/// r = M * g^k; h = H_q(r, aux); s = k + sk * h mod q.
pub fn nr_sign<R: SecretRng>(
    group: &Group,
    m: &GroupElement,
    aux: &[u8],
    sk: &Scalar,
    rng: &mut R,
) -> RecoverySignature {
    let k = group.sample_nonzero_scalar(rng);
    nr_sign_with(group, m, aux, sk, &k)
}

/// Deterministic variant with a caller-supplied blinding exponent.
pub fn nr_sign_with(
    group: &Group,
    m: &GroupElement,
    aux: &[u8],
    sk: &Scalar,
    k: &Scalar,
) -> RecoverySignature {
    let r = group.mul(m, &group.pow_g(k));
    let h = recovery_challenge(group, &r, aux);
    let s = k.add(&sk.mul(&h, group.params()), group.params());
    RecoverySignature { r, s }
}

/// Recovers r * (g^s * pk^{-h})^{-1}. Always yields some element; only the
/// caller's redundancy check on the result establishes authenticity. Two
/// exponentiations.
pub fn nr_recover(
    group: &Group,
    sig: &RecoverySignature,
    aux: &[u8],
    pk: &GroupElement,
) -> GroupElement {
    let h = recovery_challenge(group, &sig.r, aux);
    let blind = group.mul(&group.pow_g(&sig.s), &group.pow(pk, &h.neg(group.params())));
    group.mul(&sig.r, &group.invert(&blind))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::keygen;
    use crate::params::GroupId;
    use num_bigint::BigUint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn random_member(group: &Group, rng: &mut ChaCha20Rng) -> GroupElement {
        let e = group.sample_nonzero_scalar(rng);
        group.pow_g(&e)
    }

    #[test]
    fn recover_roundtrip_100_random_trials() {
        let group = Group::standard(GroupId::Modp2048);
        let mut rng = ChaCha20Rng::seed_from_u64(20);
        for _ in 0..100 {
            let kp = keygen(&group, &mut rng);
            let m = random_member(&group, &mut rng);
            let aux: Vec<u8> = (0..24).map(|_| rng.gen()).collect();
            let sig = nr_sign(&group, &m, &aux, kp.secret(), &mut rng);
            assert_eq!(nr_recover(&group, &sig, &aux, kp.public()), m);
        }
    }

    #[test]
    fn flipped_aux_bit_changes_recovered_element_100_trials() {
        let group = Group::standard(GroupId::Modp2048);
        let mut rng = ChaCha20Rng::seed_from_u64(21);
        let kp = keygen(&group, &mut rng);
        for i in 0..100usize {
            let m = random_member(&group, &mut rng);
            let aux: Vec<u8> = (0..24).map(|_| rng.gen()).collect();
            let sig = nr_sign(&group, &m, &aux, kp.secret(), &mut rng);
            let mut bad = aux.clone();
            bad[i % 24] ^= 1 << (i % 8);
            assert_ne!(nr_recover(&group, &sig, &bad, kp.public()), m);
        }
    }

    #[test]
    fn changing_pk_r_or_s_changes_recovery() {
        let group = Group::standard(GroupId::Modp2048);
        let mut rng = ChaCha20Rng::seed_from_u64(22);
        let kp = keygen(&group, &mut rng);
        for _ in 0..50 {
            let m = random_member(&group, &mut rng);
            let sig = nr_sign(&group, &m, b"aux", kp.secret(), &mut rng);

            let other = keygen(&group, &mut rng);
            assert_ne!(nr_recover(&group, &sig, b"aux", other.public()), m);

            let mut bad_r = sig.clone();
            bad_r.r = group.mul(&bad_r.r, &group.generator());
            assert_ne!(nr_recover(&group, &bad_r, b"aux", kp.public()), m);

            let mut bad_s = sig.clone();
            bad_s.s = bad_s.s.add(&Scalar::from_u64(1, group.params()), group.params());
            assert_ne!(nr_recover(&group, &bad_s, b"aux", kp.public()), m);
        }
    }

    #[test]
    fn identity_element_recovers_as_identity() {
        let group = Group::standard(GroupId::Test23);
        let mut rng = ChaCha20Rng::seed_from_u64(23);
        let kp = keygen(&group, &mut rng);
        let sig = nr_sign(&group, &GroupElement::identity(), b"aux", kp.secret(), &mut rng);
        assert_eq!(
            nr_recover(&group, &sig, b"aux", kp.public()),
            GroupElement::identity()
        );
    }

    #[test]
    fn recovery_costs_two_exponentiations() {
        let group = Group::standard(GroupId::Test23);
        let mut rng = ChaCha20Rng::seed_from_u64(24);
        let kp = keygen(&group, &mut rng);
        let m = GroupElement::new(BigUint::from(9u32), group.params()).unwrap();
        let sig = nr_sign(&group, &m, b"aux", kp.secret(), &mut rng);
        let counted = group.fork_counter();
        nr_recover(&counted, &sig, b"aux", kp.public());
        assert_eq!(counted.exp_count(), 2);
    }
}
