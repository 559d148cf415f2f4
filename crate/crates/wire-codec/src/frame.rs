use group_crypto::{CryptoError, Group, GroupElement, Scalar};

use crate::error::{CodecError, Result};
use crate::{Message, WIRE_VERSION};

/// Serializes a frame: version byte, type tag, then length-prefixed fields
/// in fixed order. Every field carries a 2-byte big-endian length so the
/// grammar stays uniform and self-delimiting.
pub struct FieldWriter {
    buf: Vec<u8>,
}

impl FieldWriter {
    pub fn new(type_tag: u8) -> FieldWriter {
        FieldWriter {
            buf: vec![WIRE_VERSION, type_tag],
        }
    }

    pub fn put_bytes(&mut self, bytes: &[u8]) {
        assert!(bytes.len() <= u16::MAX as usize, "field exceeds u16 length");
        self.buf.extend_from_slice(&(bytes.len() as u16).to_be_bytes());
        self.buf.extend_from_slice(bytes);
    }

    pub fn put_u8(&mut self, v: u8) {
        self.put_bytes(&[v]);
    }

    pub fn put_u64(&mut self, v: u64) {
        self.put_bytes(&v.to_be_bytes());
    }

    pub fn put_str(&mut self, s: &str) {
        self.put_bytes(s.as_bytes());
    }

    pub fn put_element(&mut self, e: &GroupElement) {
        self.put_bytes(&e.to_bytes());
    }

    pub fn put_scalar(&mut self, s: &Scalar, group: &Group) {
        self.put_bytes(&s.to_padded_bytes(group.params()));
    }

    pub fn put_nested<M: Message>(&mut self, msg: &M, group: &Group) {
        self.put_bytes(&crate::encode(msg, group));
    }

    pub fn finish(self) -> Vec<u8> {
        self.buf
    }
}

/// Cursor over a frame body; every accessor checks the declared length
/// against what the field type permits.
pub struct FieldReader<'a> {
    rest: &'a [u8],
}

impl<'a> FieldReader<'a> {
    pub(crate) fn new(body: &'a [u8]) -> FieldReader<'a> {
        FieldReader { rest: body }
    }

    fn take_raw(&mut self) -> Result<&'a [u8]> {
        if self.rest.len() < 2 {
            return Err(CodecError::Malformed("truncated length prefix"));
        }
        let len = u16::from_be_bytes([self.rest[0], self.rest[1]]) as usize;
        let rest = &self.rest[2..];
        if rest.len() < len {
            return Err(CodecError::Malformed("field length exceeds input"));
        }
        let (field, rest) = rest.split_at(len);
        self.rest = rest;
        Ok(field)
    }

    pub fn take_bytes(&mut self, max: usize) -> Result<&'a [u8]> {
        let field = self.take_raw()?;
        if field.len() > max {
            return Err(CodecError::Malformed("field longer than permitted"));
        }
        Ok(field)
    }

    pub fn take_fixed<const N: usize>(&mut self) -> Result<[u8; N]> {
        let field = self.take_raw()?;
        field
            .try_into()
            .map_err(|_| CodecError::Malformed("fixed-width field has wrong length"))
    }

    pub fn take_u8(&mut self) -> Result<u8> {
        Ok(self.take_fixed::<1>()?[0])
    }

    pub fn take_u64(&mut self) -> Result<u64> {
        Ok(u64::from_be_bytes(self.take_fixed::<8>()?))
    }

    pub fn take_str(&mut self, max: usize) -> Result<&'a str> {
        let field = self.take_bytes(max)?;
        std::str::from_utf8(field).map_err(|_| CodecError::Malformed("invalid utf-8"))
    }

    pub fn take_element(&mut self, group: &Group) -> Result<GroupElement> {
        let field = self.take_raw()?;
        GroupElement::from_bytes(field, group.params()).map_err(|e| match e {
            CryptoError::NonMember => CodecError::Membership,
            _ => CodecError::NonCanonical("group element encoding"),
        })
    }

    pub fn take_scalar(&mut self, group: &Group) -> Result<Scalar> {
        let field = self.take_raw()?;
        Scalar::from_canonical_bytes(field, group.params())
            .map_err(|_| CodecError::NonCanonical("scalar encoding"))
    }

    pub fn take_nested<M: Message>(&mut self, group: &Group) -> Result<M> {
        let field = self.take_raw()?;
        crate::decode(field, group)
    }

    pub(crate) fn expect_end(&self) -> Result<()> {
        if self.rest.is_empty() {
            Ok(())
        } else {
            Err(CodecError::NonCanonical("trailing bytes after last field"))
        }
    }
}
