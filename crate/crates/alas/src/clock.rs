//! Injected time source so transcripts can be replayed byte-identically.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{SystemTime, UNIX_EPOCH};

pub trait Clock: Send + Sync {
    /// Milliseconds since the Unix epoch (or since an arbitrary fixed
    /// origin for deterministic clocks).
    fn now_millis(&self) -> u64;
}

/// Wall clock.
pub struct SystemClock;

impl Clock for SystemClock {
    fn now_millis(&self) -> u64 {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis() as u64)
            .unwrap_or(0)
    }
}

/// Deterministic clock that advances by a fixed step on every read.
pub struct FixedClock {
    start: u64,
    step: u64,
    ticks: AtomicU64,
}

impl FixedClock {
    pub fn new(start: u64, step: u64) -> Self {
        Self {
            start,
            step,
            ticks: AtomicU64::new(0),
        }
    }
}

impl Clock for FixedClock {
    fn now_millis(&self) -> u64 {
        let n = self.ticks.fetch_add(1, Ordering::SeqCst);
        self.start + n * self.step
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_clock_is_a_deterministic_sequence() {
        let c = FixedClock::new(100, 10);
        assert_eq!(c.now_millis(), 100);
        assert_eq!(c.now_millis(), 110);
        assert_eq!(c.now_millis(), 120);
    }
}
