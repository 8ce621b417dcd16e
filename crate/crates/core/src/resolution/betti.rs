//! Betti tables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ring::GradedFreeModule;
use crate::{Error, Result};

/// `β_{i,j}` for the nonzero entries only.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), u64>,
}

impl BettiTable {
    pub fn from_modules(mods: &[GradedFreeModule]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, f) in mods.iter().enumerate() {
            for &a in &f.twists {
                *entries.entry((i, a)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn betti(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `t_p`, or `None` for an empty step.
    pub fn t(&self, p: usize) -> Option<i32> {
        self.entries.keys().filter(|(i, _)| *i == p).map(|&(_, j)| j).max()
    }

    /// Minimal degree at step `p`.
    pub fn min_degree(&self, p: usize) -> Option<i32> {
        self.entries.keys().filter(|(i, _)| *i == p).map(|&(_, j)| j).min()
    }

    /// `t_p` for a signed index; negative indices are an error.
    pub fn t_checked(&self, p: i64) -> Result<Option<i32>> {
        if p < 0 {
            return Err(Error::NegativeIndex(p));
        }
        Ok(self.t(p as usize))
    }

    pub fn reg(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| j - i as i32).max()
    }

    /// Projective dimension.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, &b)| b).sum()
    }

    /// `[t_0, ..., t_pd]`.
    pub fn t_vector(&self) -> Vec<Option<i32>> {
        match self.pd() {
            None => Vec::new(),
            Some(l) => (0..=l).map(|p| self.t(p)).collect(),
        }
    }

    /// Entries with `j <= cap`.
    pub fn truncated(&self, cap: i32) -> BettiTable {
        BettiTable { entries: self.entries.iter().filter(|((_, j), _)| *j <= cap).map(|(k, v)| (*k, *v)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants() {
        let t = BettiTable::from_modules(&[
            GradedFreeModule::new(vec![0]),
            GradedFreeModule::new(vec![2, 2, 3]),
            GradedFreeModule::new(vec![5]),
        ]);
        assert_eq!(t.betti(1, 2), 2);
        assert_eq!(t.t(1), Some(3));
        assert_eq!(t.t(3), None);
        assert_eq!(t.reg(), Some(3));
        assert_eq!(t.pd(), Some(2));
        assert!(t.t_checked(-1).is_err());
        assert!(BettiTable::default().reg().is_none());
    }
}
