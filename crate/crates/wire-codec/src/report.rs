/// Frame header: version byte plus type tag.
const HEADER: usize = 2;
/// Per-field 2-byte big-endian length prefix.
const LEN: usize = 2;
/// ChaCha20-Poly1305 authentication tag.
const AEAD_TAG: usize = 16;

/// Itemized nominal sizes for a presentation, derived from the frame
/// grammar with all group values at full width.
///
/// The time-bound signature contributes 2·m bits (one group element, one
/// scalar), the holder public key m bits, and the one-time identifier a
/// fixed 256 bits; everything else is the encrypted record plus framing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub group_bits: u64,
    pub result_bytes: usize,
    /// |S|: recovery signature, 2·m.
    pub signature_bytes: usize,
    /// |A_pk|: holder public key, m.
    pub holder_pk_bytes: usize,
    /// |ot_id|: fixed 32.
    pub ot_id_bytes: usize,
    pub nonce_bytes: usize,
    pub ciphertext_bytes: usize,
    pub framing_overhead_bytes: usize,
    pub total_bytes: usize,
}

/// Computes the nominal presentation size for a group width and an encoded
/// test-result size. Mirrors the frame grammar exactly; the companion
/// tests cross-check it against real encodings.
pub fn payload_size_report(group_bits: u64, result_bytes: usize) -> SizeReport {
    let m = (group_bits as usize + 7) / 8;

    let result_payload = HEADER + (LEN + result_bytes) + (LEN + m);
    let signed_result = HEADER + (LEN + result_payload) + (LEN + 32) + (LEN + m);
    let ciphertext = signed_result + AEAD_TAG;
    let c_frame = HEADER + (LEN + 12) + (LEN + ciphertext);
    let total = HEADER
        + (LEN + m)      // sig_r
        + (LEN + m)      // sig_s
        + (LEN + c_frame)
        + (LEN + 32)     // ot_id
        + (LEN + m); // holder_pk

    let payload = 2 * m + m + 32 + 12 + ciphertext;
    SizeReport {
        group_bits,
        result_bytes,
        signature_bytes: 2 * m,
        holder_pk_bytes: m,
        ot_id_bytes: 32,
        nonce_bytes: 12,
        ciphertext_bytes: ciphertext,
        framing_overhead_bytes: total - payload,
        total_bytes: total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_terms_at_2048_bits() {
        let report = payload_size_report(2048, 33);
        assert_eq!(report.signature_bytes, 512);
        assert_eq!(report.holder_pk_bytes, 256);
        assert_eq!(report.ot_id_bytes, 32);
        assert!(report.total_bytes <= crate::MAX_QR_BYTES);
    }

    #[test]
    fn halved_group_halves_signature_contribution() {
        let full = payload_size_report(2048, 33);
        let half = payload_size_report(1024, 33);
        assert_eq!(half.signature_bytes, 256);
        assert_eq!(half.signature_bytes * 2, full.signature_bytes);
        assert_eq!(half.holder_pk_bytes * 2, full.holder_pk_bytes);
    }

    #[test]
    fn total_is_linear_in_result_bytes() {
        let base = payload_size_report(2048, 0);
        for extra in [1usize, 10, 100] {
            let r = payload_size_report(2048, extra);
            assert_eq!(r.total_bytes, base.total_bytes + extra);
        }
    }

    #[test]
    fn framing_overhead_is_small_and_constant() {
        let r = payload_size_report(2048, 33);
        assert_eq!(r.framing_overhead_bytes, 18);
        assert!(r.framing_overhead_bytes * 10 <= r.total_bytes);
    }
}
