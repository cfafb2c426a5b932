//! Enumeration caps and the seed for randomized search phases.

use crate::error::{HallError, Result};

pub const DEFAULT_CAP: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0x5eed_2007;
pub const CAP_ENV: &str = "HALL_AUDIT_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of objects a single enumeration or exhaustive scan may visit.
    pub cap: u64,
    /// Seed for the randomized splitting-element search in decomposition.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cap: DEFAULT_CAP,
            seed: DEFAULT_SEED,
        }
    }
}

impl Limits {
    pub fn with_cap(cap: u64) -> Self {
        Limits {
            cap,
            ..Limits::default()
        }
    }

    /// Defaults, with the cap overridden by `HALL_AUDIT_CAP` when it is set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(CAP_ENV) {
            let cap: u64 = raw.trim().parse().map_err(|_| {
                HallError::invalid(format!("{CAP_ENV}={raw:?} is not a positive integer"))
            })?;
            if cap == 0 {
                return Err(HallError::invalid(format!("{CAP_ENV} must be positive")));
            }
            limits.cap = cap;
        }
        Ok(limits)
    }

    pub fn check(&self, what: impl FnOnce() -> String, needed: u128) -> Result<()> {
        if needed > self.cap as u128 {
            Err(HallError::Capacity {
                what: what(),
                needed,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub fn saturating_pow(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
