//! Resource ceilings for Gröbner computations.
//!
//! Limits are installed per thread with [`scoped`]; every basis computation
//! started on that thread checks them and aborts with
//! [`Error::ResourceLimit`](crate::Error::ResourceLimit) instead of running away.

use std::cell::Cell;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of pending critical pairs.
    pub max_pairs: usize,
    /// Maximum number of terms summed over the intermediate basis.
    pub max_terms: usize,
    /// Wall-clock budget for everything run inside the scope.
    pub timeout: Option<Duration>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 200_000,
            max_terms: 5_000_000,
            timeout: None,
        }
    }
}

thread_local! {
    static ACTIVE: Cell<(Limits, Option<Instant>)> = Cell::new((Limits::default(), None));
}

/// Run `f` with `limits` installed on the current thread.
pub fn scoped<T>(limits: Limits, f: impl FnOnce() -> T) -> T {
    let deadline = limits.timeout.map(|t| Instant::now() + t);
    let prev = ACTIVE.with(|a| a.replace((limits, deadline)));
    struct Restore((Limits, Option<Instant>));
    impl Drop for Restore {
        fn drop(&mut self) {
            ACTIVE.with(|a| a.set(self.0));
        }
    }
    let _restore = Restore(prev);
    f()
}

pub fn current() -> Limits {
    ACTIVE.with(|a| a.get().0)
}

pub(crate) fn check(pairs: usize, terms: usize) -> Result<()> {
    let (limits, deadline) = ACTIVE.with(|a| a.get());
    if pairs > limits.max_pairs {
        return Err(Error::ResourceLimit(format!(
            "{pairs} pending pairs exceeds ceiling {}",
            limits.max_pairs
        )));
    }
    if terms > limits.max_terms {
        return Err(Error::ResourceLimit(format!(
            "{terms} basis terms exceeds ceiling {}",
            limits.max_terms
        )));
    }
    expired(deadline)
}

pub(crate) fn check_deadline() -> Result<()> {
    expired(ACTIVE.with(|a| a.get().1))
}

fn expired(deadline: Option<Instant>) -> Result<()> {
    match deadline {
        Some(d) if Instant::now() > d => Err(Error::ResourceLimit("time budget exhausted".into())),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_restores_previous() {
        let before = current();
        let tight = Limits {
            max_pairs: 3,
            max_terms: 10,
            timeout: None,
        };
        scoped(tight, || {
            assert_eq!(current(), tight);
            assert!(check(4, 0).is_err());
            assert!(check(0, 11).is_err());
            assert!(check(3, 10).is_ok());
        });
        assert_eq!(current(), before);
    }
}
