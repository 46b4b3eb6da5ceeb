use std::fmt;

use serde::{Deserialize, Serialize};

use super::MatrixError;

/// Strictly increasing sequence of 1-based indices, i.e. an element of the
/// set of increasing `k`-sequences drawn from `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    /// Validates that `indices` is non-empty, strictly increasing, and within
    /// `1..=n`.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self, MatrixError> {
        if indices.is_empty() {
            return Err(MatrixError::InvalidIndexSet("empty index set".into()));
        }
        for (pos, &idx) in indices.iter().enumerate() {
            if idx == 0 || idx > n {
                return Err(MatrixError::IndexOutOfRange { index: idx, n });
            }
            if pos > 0 && indices[pos - 1] >= idx {
                return Err(MatrixError::InvalidIndexSet(format!(
                    "indices must be strictly increasing: {indices:?}"
                )));
            }
        }
        Ok(IndexSet(indices))
    }

    /// Builds an index set without validation; callers guarantee the
    /// invariant.
    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexSet(indices)
    }

    /// `(lo, lo+1, ..., hi)`, both ends inclusive.
    pub fn range(lo: usize, hi: usize) -> Self {
        assert!(lo >= 1 && lo <= hi, "invalid range {lo}..={hi}");
        IndexSet((lo..=hi).collect())
    }

    /// `(1, ..., n)`.
    pub fn full(n: usize) -> Self {
        Self::range(1, n)
    }

    /// `N \ {i}`; empty input sets are rejected, so `n` must be at least 2.
    pub fn without(n: usize, i: usize) -> Self {
        IndexSet((1..=n).filter(|&k| k != i).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// The same positions as 0-based offsets.
    pub(crate) fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i - 1).collect()
    }

    /// Largest index in the set.
    pub fn max(&self) -> usize {
        *self.0.last().expect("index sets are non-empty")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}
