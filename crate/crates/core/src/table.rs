//! Count tables indexed by (weight, length) and (weight, charge).

use std::collections::BTreeMap;

/// Exhaustive count table keyed by a weight and a secondary grading
/// (length of a sequence, or charge of a path). Missing keys count zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountTable {
    counts: BTreeMap<(u64, u64), u64>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, weight: u64, grade: u64) {
        *self.counts.entry((weight, grade)).or_insert(0) += 1;
    }

    pub fn get(&self, weight: u64, grade: u64) -> u64 {
        self.counts.get(&(weight, grade)).copied().unwrap_or(0)
    }

    /// Sum over the secondary grading at a fixed weight.
    pub fn row_sum(&self, weight: u64) -> u64 {
        self.counts
            .range((weight, 0)..=(weight, u64::MAX))
            .map(|(_, c)| c)
            .sum()
    }

    /// Largest secondary grade present at any weight.
    pub fn max_grade(&self) -> u64 {
        self.counts.keys().map(|&(_, m)| m).max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.counts.iter().map(|(&(n, m), &c)| (n, m, c))
    }

    /// Merge another table into this one (used by parallel enumeration;
    /// the result is independent of merge order).
    pub fn merge(&mut self, other: CountTable) {
        for ((n, m), c) in other.counts {
            *self.counts.entry((n, m)).or_insert(0) += c;
        }
    }
}
