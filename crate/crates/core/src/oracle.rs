//! The search predicate `f(r)`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::amplitude::{check_qubits, BasisIndex};
use crate::error::{Error, Result};

type Predicate = Arc<dyn Fn(BasisIndex) -> bool + Send + Sync>;

#[derive(Clone)]
enum Marked {
    Set(BTreeSet<BasisIndex>),
    Predicate(Predicate),
}

/// Black-box predicate over `[0, 2^n)`, given either as an explicit set of
/// marked states or as an opaque closure.
///
/// The oracle counts evaluation passes: each phase inversion driven by it
/// is one call to `f`, whatever the size of the register.
pub struct Oracle {
    n: u32,
    marked: Marked,
    evals: AtomicU64,
}

impl Oracle {
    pub fn from_marked<I>(n: u32, marked: I) -> Result<Self>
    where
        I: IntoIterator<Item = BasisIndex>,
    {
        check_qubits(n)?;
        let len = 1usize << n;
        let set: BTreeSet<_> = marked.into_iter().collect();
        if let Some(&r) = set.iter().find(|&&r| r >= len) {
            return Err(Error::domain(format!(
                "marked index out of range: {r} >= N = {len} ({n} qubits)"
            )));
        }
        Ok(Self {
            n,
            marked: Marked::Set(set),
            evals: AtomicU64::new(0),
        })
    }

    pub fn from_predicate<F>(n: u32, f: F) -> Result<Self>
    where
        F: Fn(BasisIndex) -> bool + Send + Sync + 'static,
    {
        check_qubits(n)?;
        Ok(Self {
            n,
            marked: Marked::Predicate(Arc::new(f)),
            evals: AtomicU64::new(0),
        })
    }

    pub fn qubits(&self) -> u32 {
        self.n
    }

    pub fn state_count(&self) -> usize {
        1usize << self.n
    }

    /// `f(r)`, without touching the evaluation counter.
    pub fn is_marked(&self, r: BasisIndex) -> bool {
        if r >= self.state_count() {
            return false;
        }
        match &self.marked {
            Marked::Set(s) => s.contains(&r),
            Marked::Predicate(f) => f(r),
        }
    }

    /// Marked states in increasing order. Predicate oracles are enumerated.
    pub fn marked_states(&self) -> Vec<BasisIndex> {
        match &self.marked {
            Marked::Set(s) => s.iter().copied().collect(),
            Marked::Predicate(f) => (0..self.state_count()).filter(|&r| f(r)).collect(),
        }
    }

    pub fn marked_count(&self) -> usize {
        match &self.marked {
            Marked::Set(s) => s.len(),
            Marked::Predicate(f) => (0..self.state_count()).filter(|&r| f(r)).count(),
        }
    }

    /// Number of evaluation passes recorded so far.
    pub fn evaluations(&self) -> u64 {
        self.evals.load(Ordering::Relaxed)
    }

    pub fn reset_evaluations(&self) {
        self.evals.store(0, Ordering::Relaxed);
    }

    pub(crate) fn record_evaluation(&self) {
        self.evals.fetch_add(1, Ordering::Relaxed);
    }

    /// Explicit marked set, if the oracle was built from one.
    pub(crate) fn marked_set(&self) -> Option<&BTreeSet<BasisIndex>> {
        match &self.marked {
            Marked::Set(s) => Some(s),
            Marked::Predicate(_) => None,
        }
    }
}

impl Clone for Oracle {
    /// The clone starts with a fresh evaluation counter.
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            marked: self.marked.clone(),
            evals: AtomicU64::new(0),
        }
    }
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Oracle");
        d.field("n", &self.n);
        match &self.marked {
            Marked::Set(s) => d.field("marked", s),
            Marked::Predicate(_) => d.field("marked", &"<predicate>"),
        };
        d.field("evals", &self.evaluations()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_oracle() {
        let o = Oracle::from_marked(3, [6, 1]).unwrap();
        assert!(o.is_marked(6));
        assert!(!o.is_marked(0));
        assert!(!o.is_marked(100));
        assert_eq!(o.marked_states(), [1, 6]);
        assert_eq!(o.marked_count(), 2);
    }

    #[test]
    fn out_of_range_marked() {
        let err = Oracle::from_marked(1, [2]).unwrap_err();
        assert!(err.to_string().contains("marked index out of range: 2"));
    }

    #[test]
    fn predicate_oracle() {
        let o = Oracle::from_predicate(4, |r| r % 5 == 0).unwrap();
        assert_eq!(o.marked_states(), [0, 5, 10, 15]);
        assert_eq!(o.evaluations(), 0);
    }

    #[test]
    fn clone_resets_counter() {
        let o = Oracle::from_marked(2, [2]).unwrap();
        o.record_evaluation();
        assert_eq!(o.evaluations(), 1);
        assert_eq!(o.clone().evaluations(), 0);
        o.reset_evaluations();
        assert_eq!(o.evaluations(), 0);
    }
}
