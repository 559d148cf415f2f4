//! Canonical, versioned binary framing for every message that crosses a
//! trust boundary, plus the base64url text form used for QR transport.
//!
//! A frame is `version || type_tag || fields`, each field carrying a
//! 2-byte big-endian length prefix, in fixed order, with no trailing
//! bytes. Encoding is canonical: exactly one byte representation per
//! value, which matters because signatures cover encodings. Group
//! elements are re-checked for subgroup membership on every decode.

mod error;
mod frame;
mod qr;
mod report;

use group_crypto::Group;

pub use error::{CodecError, Result};
pub use frame::{FieldReader, FieldWriter};
pub use qr::{from_qr_text, to_qr_text, MAX_QR_BYTES};
pub use report::{payload_size_report, SizeReport};

/// Wire format version; unknown versions are rejected, never best-effort
/// parsed.
pub const WIRE_VERSION: u8 = 0x01;

/// A protocol message with a fixed frame layout.
pub trait Message: Sized {
    const TYPE_TAG: u8;

    fn write_fields(&self, w: &mut FieldWriter, group: &Group);
    fn read_fields(r: &mut FieldReader<'_>, group: &Group) -> Result<Self>;
}

/// Canonical frame bytes for a message.
pub fn encode<M: Message>(msg: &M, group: &Group) -> Vec<u8> {
    let mut w = FieldWriter::new(M::TYPE_TAG);
    msg.write_fields(&mut w, group);
    w.finish()
}

/// Parses and validates a frame of the expected type. Rejects unknown
/// versions, wrong type tags, non-canonical field encodings, trailing
/// bytes, and non-member group elements.
pub fn decode<M: Message>(bytes: &[u8], group: &Group) -> Result<M> {
    if bytes.len() < 2 {
        return Err(CodecError::Malformed("frame shorter than header"));
    }
    if bytes[0] != WIRE_VERSION {
        return Err(CodecError::UnknownVersion(bytes[0]));
    }
    if bytes[1] != M::TYPE_TAG {
        return Err(CodecError::WrongType {
            expected: M::TYPE_TAG,
            got: bytes[1],
        });
    }
    let mut reader = FieldReader::new(&bytes[2..]);
    let msg = M::read_fields(&mut reader, group)?;
    reader.expect_end()?;
    Ok(msg)
}
