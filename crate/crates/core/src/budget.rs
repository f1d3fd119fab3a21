//! Vertex budgets for the exponential-time procedures.
//!
//! Every exact search refuses inputs above its budget instead of returning an
//! approximate answer. The default search budget is 16 vertices and can be
//! overridden through the `DICRIT_BUDGET` environment variable.

use thiserror::Error;

use crate::graph::MASK_LIMIT;

pub const DEFAULT_SEARCH_BUDGET: usize = 16;
pub const DEFAULT_ENUMERATION_BUDGET: usize = 7;
pub const BUDGET_ENV: &str = "DICRIT_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest digraph order an exact search accepts.
    pub vertices: usize,
}

impl Budget {
    pub fn new(vertices: usize) -> Self {
        Self {
            vertices: vertices.min(MASK_LIMIT),
        }
    }

    /// The default budget, or `DICRIT_BUDGET` when it parses as an integer.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::new)
            .unwrap_or_default()
    }

    pub fn check(&self, what: &'static str, order: usize) -> Result<(), BudgetExceeded> {
        if order > self.vertices {
            Err(BudgetExceeded {
                what,
                order,
                limit: self.vertices,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_SEARCH_BUDGET)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: {order} vertices exceeds the budget of {limit}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub order: usize,
    pub limit: usize,
}
