use crate::error::{CryptoError, Result};

/// Rounds a unix timestamp to its window index: floor(unix_time / window).
/// Presentations bind to a window index rather than an exact second to
/// absorb clock drift between holder and verifier.
pub fn time_window(unix_time: u64, window: u64) -> Result<u64> {
    if window == 0 {
        return Err(CryptoError::InvalidWindow);
    }
    Ok(unix_time / window)
}
