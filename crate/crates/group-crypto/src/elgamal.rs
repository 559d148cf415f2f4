use crate::element::GroupElement;
use crate::group::Group;
use crate::rng::SecretRng;
use crate::scalar::Scalar;

/// El Gamal ciphertext (c1, c2); both components are subgroup members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElGamalCiphertext {
    pub c1: GroupElement,
    pub c2: GroupElement,
}

/// Encrypt: c1 = g^d, c2 = m * pk^d for fresh random d in [1, q-1].
/// Exactly two exponentiations.
pub fn elgamal_encrypt<R: SecretRng>(
    group: &Group,
    m: &GroupElement,
    pk: &GroupElement,
    rng: &mut R,
) -> ElGamalCiphertext {
    let d = group.sample_nonzero_scalar(rng);
    elgamal_encrypt_with(group, m, pk, &d)
}

/// Deterministic variant with a caller-supplied ephemeral exponent, used
/// by tests that pin d.
pub fn elgamal_encrypt_with(
    group: &Group,
    m: &GroupElement,
    pk: &GroupElement,
    d: &Scalar,
) -> ElGamalCiphertext {
    let c1 = group.pow_g(d);
    let c2 = group.mul(m, &group.pow(pk, d));
    ElGamalCiphertext { c1, c2 }
}

/// Decrypt: m = c2 * (c1^sk)^{-1} mod p. One exponentiation; the inverse
/// runs through extended gcd.
pub fn elgamal_decrypt(group: &Group, ct: &ElGamalCiphertext, sk: &Scalar) -> GroupElement {
    let shared = group.pow(&ct.c1, sk);
    group.mul(&ct.c2, &group.invert(&shared))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{keygen, KeyPair};
    use crate::params::GroupId;
    use num_bigint::BigUint;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn fixed_vector_in_test_group() {
        // pk = 18 (sk = 3), m = 9, d = 7 -> (8, 8); hand-checked:
        // 4^7 = 8, 18^7 = 6, 9*6 = 54 = 8 (mod 23)
        let group = Group::standard(GroupId::Test23);
        let pk = GroupElement::new(BigUint::from(18u32), group.params()).unwrap();
        let m = GroupElement::new(BigUint::from(9u32), group.params()).unwrap();
        let d = Scalar::from_u64(7, group.params());
        let ct = elgamal_encrypt_with(&group, &m, &pk, &d);
        assert_eq!(ct.c1.value(), &BigUint::from(8u32));
        assert_eq!(ct.c2.value(), &BigUint::from(8u32));

        let sk = Scalar::from_u64(3, group.params());
        assert_eq!(elgamal_decrypt(&group, &ct, &sk), m);
    }

    #[test]
    fn identity_message_yields_pk_power() {
        let group = Group::standard(GroupId::Test23);
        let sk = Scalar::from_u64(3, group.params());
        let kp = KeyPair::from_secret(&group, sk.clone()).unwrap();
        let d = Scalar::from_u64(5, group.params());
        let ct = elgamal_encrypt_with(&group, &GroupElement::identity(), kp.public(), &d);
        assert_eq!(ct.c2, group.pow(kp.public(), &d));
        assert_eq!(elgamal_decrypt(&group, &ct, &sk), GroupElement::identity());
    }

    #[test]
    fn trivial_blinding_ciphertext_decrypts_to_c2() {
        // c1 = 1 corresponds to d = 0; decryption returns c2 unchanged
        let group = Group::standard(GroupId::Test23);
        let m = GroupElement::new(BigUint::from(13u32), group.params()).unwrap();
        let ct = ElGamalCiphertext {
            c1: GroupElement::identity(),
            c2: m.clone(),
        };
        for sk in 1..11u64 {
            assert_eq!(
                elgamal_decrypt(&group, &ct, &Scalar::from_u64(sk, group.params())),
                m
            );
        }
    }

    #[test]
    fn repeated_encryptions_differ_and_occasionally_collide() {
        // c1 repeats only when the ephemeral d repeats: probability 1/(q-1)
        // per pair. Over 1000 pairs in the q=11 group both outcomes occur.
        let group = Group::standard(GroupId::Test23);
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let kp = keygen(&group, &mut rng);
        let m = GroupElement::new(BigUint::from(9u32), group.params()).unwrap();
        let mut differed = 0;
        let mut collided = 0;
        for _ in 0..1000 {
            let a = elgamal_encrypt(&group, &m, kp.public(), &mut rng);
            let b = elgamal_encrypt(&group, &m, kp.public(), &mut rng);
            if a.c1 == b.c1 {
                collided += 1;
            } else {
                differed += 1;
            }
        }
        assert!(differed > 800, "differed {differed}");
        assert!(collided > 10, "collided {collided}");
    }

    #[test]
    fn encrypt_counts_two_exponentiations_decrypt_one() {
        let group = Group::standard(GroupId::Test23).fork_counter();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let kp = keygen(&group, &mut rng);
        let m = GroupElement::new(BigUint::from(9u32), group.params()).unwrap();

        let enc_group = group.fork_counter();
        let ct = elgamal_encrypt(&enc_group, &m, kp.public(), &mut rng);
        assert_eq!(enc_group.exp_count(), 2);

        let dec_group = group.fork_counter();
        let out = elgamal_decrypt(&dec_group, &ct, kp.secret());
        assert_eq!(dec_group.exp_count(), 1);
        assert_eq!(out, m);
    }
}
