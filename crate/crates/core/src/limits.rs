//! Process-wide size cap on graph and matrix orders.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 4096;

/// Absolute tolerance used by inequality comparisons unless overridden.
pub const DEFAULT_TOL: f64 = 1e-8;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Replaces the cap for the rest of the process. Intended for the CLI, which
/// reads it once from `NG_MAX_ORDER` or a flag before doing any work.
pub fn set_max_order(cap: usize) {
    MAX_ORDER.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::EmptyOrder);
    }
    let cap = max_order();
    if order > cap {
        return Err(Error::OrderTooLarge { order, cap });
    }
    Ok(())
}
