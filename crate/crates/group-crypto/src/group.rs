use std::sync::Arc;

use num_bigint::BigUint;

use crate::counter::ExpCounter;
use crate::element::GroupElement;
use crate::error::Result;
use crate::params::{lookup_standard, GroupId, GroupParams};
use crate::rng::{sample_biguint_below, SecretRng};
use crate::scalar::Scalar;

/// Handle bundling validated group parameters with an injected
/// exponentiation tally.
///
/// Clones share both; [`Group::fork_counter`] keeps the parameters but
/// starts a fresh tally for per-run instrumentation.
#[derive(Debug, Clone)]
pub struct Group {
    params: Arc<GroupParams>,
    counter: ExpCounter,
}

impl Group {
    /// A compiled-in group by identifier, validated once per process.
    pub fn standard(id: GroupId) -> Group {
        Group {
            params: lookup_standard(id),
            counter: ExpCounter::new(),
        }
    }

    pub fn from_params(params: GroupParams) -> Group {
        Group {
            params: Arc::new(params),
            counter: ExpCounter::new(),
        }
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn counter(&self) -> &ExpCounter {
        &self.counter
    }

    pub fn exp_count(&self) -> u64 {
        self.counter.count()
    }

    /// Same parameters, fresh exponentiation counter.
    pub fn fork_counter(&self) -> Group {
        Group {
            params: self.params.clone(),
            counter: ExpCounter::new(),
        }
    }

    pub fn generator(&self) -> GroupElement {
        GroupElement::new_unchecked(self.params.generator_value().clone())
    }

    /// Modular exponentiation `base^e mod p`; the counted operation.
    pub fn pow(&self, base: &GroupElement, e: &Scalar) -> GroupElement {
        self.counter.bump();
        GroupElement::new_unchecked(base.value().modpow(e.value(), self.params.modulus()))
    }

    /// `g^e mod p`; counted.
    pub fn pow_g(&self, e: &Scalar) -> GroupElement {
        self.counter.bump();
        GroupElement::new_unchecked(
            self.params
                .generator_value()
                .modpow(e.value(), self.params.modulus()),
        )
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement::new_unchecked((a.value() * b.value()) % self.params.modulus())
    }

    /// Multiplicative inverse via extended gcd; not an exponentiation, so
    /// it does not hit the counter. Members of a prime-modulus group are
    /// always invertible.
    pub fn invert(&self, x: &GroupElement) -> GroupElement {
        let inv = x
            .value()
            .modinv(self.params.modulus())
            .expect("subgroup members are coprime to p");
        GroupElement::new_unchecked(inv)
    }

    /// Uniform scalar in [1, q-1].
    pub fn sample_nonzero_scalar<R: SecretRng>(&self, rng: &mut R) -> Scalar {
        loop {
            let v = sample_biguint_below(rng, self.params.order());
            if v != BigUint::default() {
                return Scalar::reduce(v, &self.params);
            }
        }
    }

    /// Uniform scalar in [0, q-1].
    pub fn sample_scalar<R: SecretRng>(&self, rng: &mut R) -> Scalar {
        Scalar::reduce(sample_biguint_below(rng, self.params.order()), &self.params)
    }
}

/// A discrete-log keypair: secret scalar and public element pk = g^sk.
#[derive(Debug, Clone)]
pub struct KeyPair {
    sk: Scalar,
    pk: GroupElement,
}

impl KeyPair {
    /// Builds the pair from an existing secret; zero is rejected at this
    /// boundary (the identity exponent is never a usable key).
    pub fn from_secret(group: &Group, sk: Scalar) -> Result<KeyPair> {
        if sk.is_zero() {
            return Err(crate::error::CryptoError::ZeroSecret);
        }
        let pk = group.pow_g(&sk);
        Ok(KeyPair { sk, pk })
    }

    pub fn secret(&self) -> &Scalar {
        &self.sk
    }

    pub fn public(&self) -> &GroupElement {
        &self.pk
    }
}

/// KeyGen: sk uniform in [1, q-1], pk = g^sk mod p.
pub fn keygen<R: SecretRng>(group: &Group, rng: &mut R) -> KeyPair {
    let sk = group.sample_nonzero_scalar(rng);
    let pk = group.pow_g(&sk);
    KeyPair { sk, pk }
}
