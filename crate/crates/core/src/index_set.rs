//! Finite sets of positions into the sequence `R`.
//!
//! An index `n` stands for `R_n`, so with the default odd sequence the set
//! `{1, 2, 3}` denotes `{3, 5, 7}`. Adding 2 to every element of a set of odd
//! values is the index shift `n -> n + 1`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::numeric::{BigInt, Rational};
use crate::sequence::SequenceSpec;

/// Strictly increasing list of indices, all `>= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if indices.first() == Some(&0) {
            return Err(Error::InvalidIndexSet("indices start at 1".into()));
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndexSet(format!("repeated index in {indices:?}")));
        }
        Ok(IndexSet(indices))
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: usize, hi: usize) -> Self {
        assert!(lo >= 1, "indices start at 1");
        IndexSet((lo..=hi).collect())
    }

    /// Builds a set from odd values under the default sequence,
    /// e.g. `{3, 7}` becomes indices `{1, 3}`.
    pub fn from_odd_values(values: &[u64]) -> Result<Self> {
        let indices = values
            .iter()
            .map(|&v| {
                if v >= 3 && v % 2 == 1 {
                    Ok(((v - 1) / 2) as usize)
                } else {
                    Err(Error::InvalidIndexSet(format!("{v} is not an odd value >= 3")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        IndexSet::new(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.0.binary_search(&n).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.iter().all(|n| other.contains(n))
    }

    /// Index shift `n -> n + by` (for odd values: `S + 2*by`).
    pub fn shift(&self, by: usize) -> IndexSet {
        IndexSet(self.0.iter().map(|n| n + by).collect())
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().merge(other.iter()).dedup().collect())
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        IndexSet(self.iter().filter(|&n| !other.contains(n)).collect())
    }

    /// The `j` smallest elements. Panics if `j > len`.
    pub fn smallest(&self, j: usize) -> IndexSet {
        IndexSet(self.0[..j].to_vec())
    }

    /// The `j` greatest elements. Panics if `j > len`.
    pub fn greatest(&self, j: usize) -> IndexSet {
        IndexSet(self.0[self.0.len() - j..].to_vec())
    }

    pub fn values(&self, seq: &SequenceSpec) -> Result<Vec<Rational>> {
        self.iter().map(|n| seq.value(n)).collect()
    }

    /// Product of the denoted values; 1 for the empty set.
    pub fn product(&self, seq: &SequenceSpec) -> Result<Rational> {
        self.iter().map(|n| seq.value(n)).product()
    }

    /// Product of the denoted odd values `2n + 1`.
    pub fn odd_product(&self) -> BigInt {
        self.iter().map(|n| BigInt::from(2 * n + 1)).product()
    }

    /// Denoted odd values, ascending.
    pub fn odd_values(&self) -> Vec<u64> {
        self.iter().map(|n| 2 * n as u64 + 1).collect()
    }
}

impl fmt::Display for IndexSet {
    /// Shown through the default sequence, e.g. `{3,5,9}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.odd_values().iter().join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexSet{:?}", self.0)
    }
}
