//! Cooperative time limits for the exponential searches.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("time budget exceeded")]
pub struct BudgetExceeded;

/// A deadline shared by all workers of one computation. Searches poll
/// [`Budget::check`] between units of work; the first expiry is sticky.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    tripped: Arc<AtomicBool>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(secs: f64) -> Self {
        Budget::within(Duration::from_secs_f64(secs.max(0.0)))
    }

    pub fn within(d: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + d),
            tripped: Arc::default(),
        }
    }

    pub fn is_limited(&self) -> bool {
        self.deadline.is_some()
    }

    pub fn check(&self) -> Result<(), BudgetExceeded> {
        let Some(deadline) = self.deadline else {
            return Ok(());
        };
        if self.tripped.load(Ordering::Relaxed) {
            return Err(BudgetExceeded);
        }
        if Instant::now() >= deadline {
            self.tripped.store(true, Ordering::Relaxed);
            return Err(BudgetExceeded);
        }
        Ok(())
    }
}
