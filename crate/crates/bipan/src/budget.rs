//! Node-expansion budget shared by the bounded searches. Exhausting the
//! budget is always an explicit error, never a silent "absent".

use thiserror::Error;

/// Default node-expansion cap for the certifier and the oracle.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error)]
#[error("search budget of {limit} node expansions exhausted")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// Counts DFS node expansions against a fixed limit.
#[derive(Debug)]
pub struct SearchBudget {
    limit: u64,
    remaining: u64,
}

impl SearchBudget {
    pub fn new(limit: u64) -> Self {
        SearchBudget { limit, remaining: limit }
    }

    pub fn spend(&mut self) -> Result<(), BudgetExceeded> {
        if self.remaining == 0 {
            return Err(BudgetExceeded { limit: self.limit });
        }
        self.remaining -= 1;
        Ok(())
    }

    pub fn spent(&self) -> u64 {
        self.limit - self.remaining
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(DEFAULT_BUDGET)
    }
}
