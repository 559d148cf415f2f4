use num_bigint::BigUint;
use num_traits::One;

use crate::error::{CryptoError, Result};
use crate::params::GroupParams;

/// A member of the order-q subgroup of integers modulo p.
///
/// Public constructors verify subgroup membership, so holding a
/// `GroupElement` is proof the value passed the check. Internal arithmetic
/// uses the unchecked path since the subgroup is closed under it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(BigUint);

impl GroupElement {
    /// Validates membership and wraps the value.
    pub fn new(value: BigUint, params: &GroupParams) -> Result<GroupElement> {
        if params.is_member(&value) {
            Ok(GroupElement(value))
        } else {
            Err(CryptoError::NonMember)
        }
    }

    pub fn identity() -> GroupElement {
        GroupElement(BigUint::one())
    }

    pub(crate) fn new_unchecked(value: BigUint) -> GroupElement {
        GroupElement(value)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    /// Minimal-length big-endian wire form (no leading zero byte; the
    /// identity encodes as the single byte 0x01).
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.to_bytes_be()
    }

    /// Parses the minimal big-endian wire form, re-checking membership.
    pub fn from_bytes(bytes: &[u8], params: &GroupParams) -> Result<GroupElement> {
        if bytes.is_empty() || bytes.len() > params.element_width() {
            return Err(CryptoError::NonCanonicalElement);
        }
        if bytes.len() > 1 && bytes[0] == 0 {
            return Err(CryptoError::NonCanonicalElement);
        }
        GroupElement::new(BigUint::from_bytes_be(bytes), params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{lookup_standard, GroupId};

    #[test]
    fn accepts_subgroup_members_only() {
        let params = lookup_standard(GroupId::Test23);
        // subgroup of order 11 mod 23: powers of 4
        let members = [1u32, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18];
        for v in 1..23u32 {
            let got = GroupElement::new(BigUint::from(v), &params);
            if members.contains(&v) {
                assert!(got.is_ok(), "{v} should be a member");
            } else {
                assert_eq!(got.unwrap_err(), CryptoError::NonMember, "{v}");
            }
        }
    }

    #[test]
    fn rejects_zero_and_modulus() {
        let params = lookup_standard(GroupId::Test23);
        assert!(GroupElement::new(BigUint::from(0u32), &params).is_err());
        assert!(GroupElement::new(BigUint::from(23u32), &params).is_err());
        assert!(GroupElement::new(BigUint::from(24u32), &params).is_err());
    }

    #[test]
    fn wire_form_is_minimal() {
        let params = lookup_standard(GroupId::Test23);
        let e = GroupElement::new(BigUint::from(18u32), &params).unwrap();
        assert_eq!(e.to_bytes(), vec![18u8]);
        assert_eq!(GroupElement::from_bytes(&[18u8], &params).unwrap(), e);
        // leading zero is non-canonical
        assert_eq!(
            GroupElement::from_bytes(&[0u8, 18u8], &params).unwrap_err(),
            CryptoError::NonCanonicalElement
        );
        assert_eq!(
            GroupElement::from_bytes(&[], &params).unwrap_err(),
            CryptoError::NonCanonicalElement
        );
    }

    #[test]
    fn identity_roundtrip() {
        let params = lookup_standard(GroupId::Test23);
        let one = GroupElement::identity();
        assert_eq!(one.to_bytes(), vec![1u8]);
        assert_eq!(GroupElement::from_bytes(&[1u8], &params).unwrap(), one);
    }
}
