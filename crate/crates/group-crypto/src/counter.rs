use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

/// Shared tally of modular exponentiations.
///
/// Injected into a [`crate::Group`] handle at construction; clones share the
/// same underlying count. Per-run instrumentation forks a fresh counter and
/// merges the totals afterwards, so there is no global mutable state.
///
/// Only operation-level exponentiations are counted. Parse-time membership
/// and primality checks are excluded: validation happens at construction
/// boundaries, not on the hot path.
#[derive(Debug, Clone, Default)]
pub struct ExpCounter(Arc<AtomicU64>);

impl ExpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn bump(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }

    pub fn count(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }

    /// Adds another counter's total into this one.
    pub fn merge(&self, other: &ExpCounter) {
        self.0.fetch_add(other.count(), Ordering::Relaxed);
    }
}
