//! Work guard: every exhaustive sweep refuses up front when the number
//! of objects it would visit exceeds a configurable cap.

use num::{BigInt, ToPrimitive};

use crate::error::{Error, Result};

/// Default cap on the number of enumerated objects per operation.
pub const DEFAULT_GUARD_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkGuard {
    cap: u64,
}

impl Default for WorkGuard {
    fn default() -> Self {
        WorkGuard {
            cap: DEFAULT_GUARD_CAP,
        }
    }
}

impl WorkGuard {
    pub fn new(cap: u64) -> Self {
        WorkGuard { cap: cap.max(1) }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Admits an exactly-known object count, returning it as `u64`.
    pub fn admit(&self, task: &str, estimate: &BigInt) -> Result<u64> {
        if estimate > &BigInt::from(self.cap) {
            return Err(Error::GuardExceeded {
                task: task.to_string(),
                estimate: estimate.to_string(),
                cap: self.cap,
            });
        }
        // Nonnegative and <= cap, so the conversion cannot fail.
        Ok(estimate.to_u64().expect("estimate within guard cap"))
    }

    /// Refuses with a symbolic estimate, for domains too large to even count.
    pub fn refuse(&self, task: &str, estimate: String) -> Error {
        Error::GuardExceeded {
            task: task.to_string(),
            estimate,
            cap: self.cap,
        }
    }
}
