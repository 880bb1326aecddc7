//! Resource limits for the exact enumerations and the linking-number DP.

use crate::{Error, Result};

/// Upper bounds that the expensive exact computations check before starting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    /// Memory cap in bytes for dense tables.
    pub memory_bytes: u64,
    /// Maximum number of permutations an exact enumeration may visit.
    pub max_permutations: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            memory_bytes: 2 << 30,
            // 11! permutations, enough for c2 up to 11 petals.
            max_permutations: 39_916_800,
        }
    }
}

impl Budget {
    pub const ENV_VAR: &'static str = "PETALUMA_BUDGET_GB";

    /// Default budget with the memory cap taken from `PETALUMA_BUDGET_GB` when set.
    pub fn from_env() -> Result<Self> {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var(Self::ENV_VAR) {
            let gb: f64 = v.trim().parse().map_err(|_| {
                Error::BudgetExceeded(format!("{} is not a number: {v:?}", Self::ENV_VAR))
            })?;
            if !(gb > 0.0) {
                return Err(Error::BudgetExceeded(format!("{} must be positive", Self::ENV_VAR)));
            }
            b.memory_bytes = (gb * (1u64 << 30) as f64) as u64;
        }
        Ok(b)
    }

    pub fn unlimited() -> Self {
        Budget { memory_bytes: u64::MAX, max_permutations: u64::MAX }
    }

    pub(crate) fn check_memory(&self, bytes: u64, what: &str) -> Result<()> {
        if bytes > self.memory_bytes {
            return Err(Error::BudgetExceeded(format!(
                "{what} needs about {bytes} bytes, budget is {}",
                self.memory_bytes
            )));
        }
        Ok(())
    }

    pub(crate) fn check_permutations(&self, count: u64, what: &str) -> Result<()> {
        if count > self.max_permutations {
            return Err(Error::BudgetExceeded(format!(
                "{what} visits {count} permutations, budget is {}",
                self.max_permutations
            )));
        }
        Ok(())
    }
}
