use num_bigint::BigUint;
use num_traits::Zero;
use rand::rngs::OsRng;
use rand::{CryptoRng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Bound alias for injected randomness sources.
///
/// All random scalars, identifiers and nonces flow through an injected
/// source so tests can replay deterministic streams; production callers
/// pass an OS-grade generator.
pub trait SecretRng: RngCore + CryptoRng {}

impl<T: RngCore + CryptoRng> SecretRng for T {}

/// Concrete randomness source for components that need to own one.
#[derive(Debug)]
pub enum RngSource {
    /// OS entropy; the production path.
    Os(OsRng),
    /// Deterministic stream for tests and scenario replay.
    Seeded(ChaCha20Rng),
}

impl RngSource {
    pub fn os() -> RngSource {
        RngSource::Os(OsRng)
    }

    pub fn seeded(seed: u64) -> RngSource {
        RngSource::Seeded(ChaCha20Rng::seed_from_u64(seed))
    }
}

impl RngCore for RngSource {
    fn next_u32(&mut self) -> u32 {
        match self {
            RngSource::Os(r) => r.next_u32(),
            RngSource::Seeded(r) => r.next_u32(),
        }
    }

    fn next_u64(&mut self) -> u64 {
        match self {
            RngSource::Os(r) => r.next_u64(),
            RngSource::Seeded(r) => r.next_u64(),
        }
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        match self {
            RngSource::Os(r) => r.fill_bytes(dest),
            RngSource::Seeded(r) => r.fill_bytes(dest),
        }
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        match self {
            RngSource::Os(r) => r.try_fill_bytes(dest),
            RngSource::Seeded(r) => r.try_fill_bytes(dest),
        }
    }
}

impl CryptoRng for RngSource {}

/// Uniform sample in [0, bound) by rejection from masked big-endian bytes.
pub(crate) fn sample_biguint_below<R: RngCore + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "sampling bound must be positive");
    let bits = bound.bits();
    let nbytes = ((bits + 7) / 8) as usize;
    let top_mask: u8 = if bits % 8 == 0 {
        0xff
    } else {
        (1u8 << (bits % 8)) - 1
    };
    let mut buf = vec![0u8; nbytes];
    loop {
        rng.fill_bytes(&mut buf);
        buf[0] &= top_mask;
        let v = BigUint::from_bytes_be(&buf);
        if &v < bound {
            return v;
        }
    }
}
