use crate::error::{Error, Result};

/// Default bound on elementary enumeration steps.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Environment variable consulted by [`Budget::from_env`].
pub const BUDGET_ENV: &str = "HOPFPOLY_BUDGET";

/// Step limits for the two exponential enumerations in the crate: orientation
/// search and coloring enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub orientation_steps: u64,
    pub coloring_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget::uniform(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn uniform(limit: u64) -> Self {
        Budget {
            orientation_steps: limit,
            coloring_steps: limit,
        }
    }

    pub fn unlimited() -> Self {
        Budget::uniform(u64::MAX)
    }

    /// Reads [`BUDGET_ENV`], falling back to the default.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map(Budget::uniform)
            .unwrap_or_default()
    }

    pub(crate) fn check_colorings(&self, palette: u64, vertices: usize) -> Result<u64> {
        let total = checked_pow(palette, vertices).filter(|t| *t <= self.coloring_steps);
        total.ok_or(Error::BudgetExceeded {
            what: "coloring enumeration",
            limit: self.coloring_steps,
        })
    }

    pub(crate) fn check_compositions(&self, count: u64) -> Result<()> {
        if count > self.orientation_steps {
            return Err(Error::BudgetExceeded {
                what: "composition enumeration",
                limit: self.orientation_steps,
            });
        }
        Ok(())
    }
}

pub(crate) fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// A countdown shared by a recursive search.
#[derive(Debug)]
pub(crate) struct StepCounter {
    remaining: u64,
    limit: u64,
    what: &'static str,
}

impl StepCounter {
    pub(crate) fn new(limit: u64, what: &'static str) -> Self {
        StepCounter {
            remaining: limit,
            limit,
            what,
        }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(Error::BudgetExceeded {
                what: self.what,
                limit: self.limit,
            });
        }
        self.remaining -= 1;
        Ok(())
    }
}
