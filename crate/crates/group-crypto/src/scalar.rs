use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{CryptoError, Result};
use crate::params::GroupParams;

/// An exponent in [0, q-1], reduced modulo q at construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigUint);

impl Scalar {
    /// Wraps a value into the scalar field, reducing modulo q.
    pub fn reduce(value: BigUint, params: &GroupParams) -> Scalar {
        Scalar(value % params.order())
    }

    pub fn from_u64(value: u64, params: &GroupParams) -> Scalar {
        Scalar::reduce(BigUint::from(value), params)
    }

    pub fn zero() -> Scalar {
        Scalar(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn add(&self, rhs: &Scalar, params: &GroupParams) -> Scalar {
        Scalar((&self.0 + &rhs.0) % params.order())
    }

    pub fn mul(&self, rhs: &Scalar, params: &GroupParams) -> Scalar {
        Scalar((&self.0 * &rhs.0) % params.order())
    }

    /// Additive inverse modulo q.
    pub fn neg(&self, params: &GroupParams) -> Scalar {
        if self.0.is_zero() {
            Scalar::zero()
        } else {
            Scalar(params.order() - &self.0)
        }
    }

    /// Fixed-width big-endian bytes, zero-padded to the byte length of q.
    pub fn to_padded_bytes(&self, params: &GroupParams) -> Vec<u8> {
        let raw = self.0.to_bytes_be();
        let width = params.scalar_width();
        let mut out = vec![0u8; width];
        out[width - raw.len()..].copy_from_slice(&raw);
        out
    }

    /// Parses the fixed-width wire form; the length must equal the scalar
    /// width of the group and the value must be below q.
    pub fn from_canonical_bytes(bytes: &[u8], params: &GroupParams) -> Result<Scalar> {
        if bytes.len() != params.scalar_width() {
            return Err(CryptoError::NonCanonicalScalar);
        }
        let v = BigUint::from_bytes_be(bytes);
        if &v >= params.order() {
            return Err(CryptoError::NonCanonicalScalar);
        }
        Ok(Scalar(v))
    }
}
