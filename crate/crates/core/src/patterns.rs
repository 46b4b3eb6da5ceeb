//! Zero-pattern structure: index-set enumeration, staircase shapes,
//! nontrivial submatrices and checkerboard sign patterns.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{IndexSet, RMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("subset length {k} is not in 1..={n}")]
    InvalidLength { k: usize, n: usize },
    #[error("nontriviality needs TypeI or TypeII, got {0}")]
    InvalidType(StaircaseType),
    #[error("row and column index sets differ in length ({rows} vs {cols})")]
    LengthMismatch { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("pattern orders differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

/// All strictly increasing `k`-sequences from `1..=n` in lexicographic
/// order.
pub fn enumerate_index_sets(k: usize, n: usize) -> Result<Vec<IndexSet>, PatternError> {
    Ok(IndexSets::new(k, n)?.collect())
}

/// Lazy lexicographic iterator over increasing `k`-sequences of `1..=n`.
#[derive(Clone, Debug)]
pub struct IndexSets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl IndexSets {
    pub fn new(k: usize, n: usize) -> Result<Self, PatternError> {
        if k == 0 || k > n {
            return Err(PatternError::InvalidLength { k, n });
        }
        Ok(IndexSets { n, current: Some((1..=k).collect()) })
    }
}

impl Iterator for IndexSets {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        let cur = self.current.as_mut()?;
        let out = IndexSet::from_sorted(cur.clone());
        let k = cur.len();
        // rightmost position that can still move up
        match (0..k).rev().find(|&p| cur[p] < self.n - (k - 1 - p)) {
            Some(p) => {
                cur[p] += 1;
                for q in p + 1..k {
                    cur[q] = cur[q - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Binomial coefficient, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Which staircase shapes a matrix has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StaircaseType {
    TypeI,
    TypeII,
    Both,
    Neither,
}

impl StaircaseType {
    fn from_flags(type_i: bool, type_ii: bool) -> Self {
        match (type_i, type_ii) {
            (true, true) => StaircaseType::Both,
            (true, false) => StaircaseType::TypeI,
            (false, true) => StaircaseType::TypeII,
            (false, false) => StaircaseType::Neither,
        }
    }

    pub fn has_type_i(self) -> bool {
        matches!(self, StaircaseType::TypeI | StaircaseType::Both)
    }

    pub fn has_type_ii(self) -> bool {
        matches!(self, StaircaseType::TypeII | StaircaseType::Both)
    }

    /// The type of `P_n A` given the type of `A`.
    pub fn flip(self) -> Self {
        Self::from_flags(self.has_type_ii(), self.has_type_i())
    }

    /// Nontrivial-minor rule used for ASSR testing. A matrix that is both
    /// type-I and type-II uses the main-diagonal rule.
    pub fn nontrivial_rule(self) -> Option<NontrivialRule> {
        match self {
            StaircaseType::TypeI | StaircaseType::Both => Some(NontrivialRule::MainDiagonal),
            StaircaseType::TypeII => Some(NontrivialRule::BackwardDiagonal),
            StaircaseType::Neither => None,
        }
    }
}

impl fmt::Display for StaircaseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StaircaseType::TypeI => "TypeI",
            StaircaseType::TypeII => "TypeII",
            StaircaseType::Both => "Both",
            StaircaseType::Neither => "Neither",
        })
    }
}

/// Which diagonal of a submatrix must be zero-free for it to count as
/// nontrivial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NontrivialRule {
    /// Type-I staircase: `a[rows_i, cols_i] != 0` for all `i`.
    MainDiagonal,
    /// Type-II staircase: `a[rows_i, cols_{m-i+1}] != 0` for all `i`.
    BackwardDiagonal,
}

/// Nonzero mask of a square matrix; `true` marks a nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZeroPattern {
    n: usize,
    mask: Vec<bool>,
}

impl ZeroPattern {
    pub fn from_mask(n: usize, mask: Vec<bool>) -> Self {
        assert_eq!(mask.len(), n * n, "mask must hold n*n flags");
        ZeroPattern { n, mask }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// 1-based.
    pub fn is_nonzero(&self, i: usize, j: usize) -> bool {
        self.mask[(i - 1) * self.n + (j - 1)]
    }

    fn nz0(&self, r: usize, c: usize) -> bool {
        self.mask[r * self.n + c]
    }

    pub fn count_zeros(&self) -> usize {
        self.mask.iter().filter(|&&m| !m).count()
    }

    /// Pattern of `P_n A`.
    pub fn flip_rows(&self) -> Self {
        let n = self.n;
        let mask = (0..n).flat_map(|r| (0..n).map(move |c| (n - 1 - r, c))).map(|(r, c)| self.nz0(r, c)).collect();
        ZeroPattern { n, mask }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mask = (0..n).flat_map(|r| (0..n).map(move |c| (c, r))).map(|(r, c)| self.nz0(r, c)).collect();
        ZeroPattern { n, mask }
    }

    /// Type-I staircase test. Zeros strictly below the diagonal must be
    /// closed under moving down and left, zeros strictly above it under
    /// moving up and right; one-step closure suffices since every step stays
    /// in the same triangle. O(n^2).
    pub fn is_type_i_staircase(&self) -> bool {
        let n = self.n;
        if !(0..n).all(|k| self.nz0(k, k)) {
            return false;
        }
        for r in 0..n {
            for c in 0..n {
                if self.nz0(r, c) || r == c {
                    continue;
                }
                let closed = if r > c {
                    (r + 1 == n || !self.nz0(r + 1, c)) && (c == 0 || !self.nz0(r, c - 1))
                } else {
                    (r == 0 || !self.nz0(r - 1, c)) && (c + 1 == n || !self.nz0(r, c + 1))
                };
                if !closed {
                    return false;
                }
            }
        }
        true
    }

    /// Type-II staircase test. Zeros below the backward diagonal must be
    /// closed under moving down and right, zeros above it under moving up
    /// and left. O(n^2).
    pub fn is_type_ii_staircase(&self) -> bool {
        let n = self.n;
        if !(0..n).all(|k| self.nz0(k, n - 1 - k)) {
            return false;
        }
        for r in 0..n {
            for c in 0..n {
                if self.nz0(r, c) || r + c == n - 1 {
                    continue;
                }
                let closed = if r + c > n - 1 {
                    (r + 1 == n || !self.nz0(r + 1, c)) && (c + 1 == n || !self.nz0(r, c + 1))
                } else {
                    (r == 0 || !self.nz0(r - 1, c)) && (c == 0 || !self.nz0(r, c - 1))
                };
                if !closed {
                    return false;
                }
            }
        }
        true
    }

    pub fn staircase_type(&self) -> StaircaseType {
        StaircaseType::from_flags(self.is_type_i_staircase(), self.is_type_ii_staircase())
    }

    /// Nontriviality on 0-based index slices of equal length.
    pub(crate) fn is_nontrivial0(&self, rows: &[usize], cols: &[usize], rule: NontrivialRule) -> bool {
        let m = rows.len();
        match rule {
            NontrivialRule::MainDiagonal => (0..m).all(|i| self.nz0(rows[i], cols[i])),
            NontrivialRule::BackwardDiagonal => (0..m).all(|i| self.nz0(rows[i], cols[m - 1 - i])),
        }
    }
}

pub fn zero_pattern(a: &RMatrix) -> ZeroPattern {
    ZeroPattern { n: a.order(), mask: a.entries().map(|v| !v.is_zero()).collect() }
}

pub fn patterns_equal(p: &ZeroPattern, q: &ZeroPattern) -> Result<bool, PatternError> {
    if p.n != q.n {
        return Err(PatternError::DimensionMismatch { left: p.n, right: q.n });
    }
    Ok(p == q)
}

pub fn is_type_i_staircase(a: &RMatrix) -> bool {
    zero_pattern(a).is_type_i_staircase()
}

pub fn is_type_ii_staircase(a: &RMatrix) -> bool {
    zero_pattern(a).is_type_ii_staircase()
}

pub fn staircase_type(a: &RMatrix) -> StaircaseType {
    zero_pattern(a).staircase_type()
}

/// Whether `A[rows|cols]` has a zero-free main (TypeI) or backward (TypeII)
/// diagonal.
pub fn is_nontrivial(
    a: &RMatrix,
    rows: &IndexSet,
    cols: &IndexSet,
    t: StaircaseType,
) -> Result<bool, PatternError> {
    let rule = match t {
        StaircaseType::TypeI => NontrivialRule::MainDiagonal,
        StaircaseType::TypeII => NontrivialRule::BackwardDiagonal,
        other => return Err(PatternError::InvalidType(other)),
    };
    if rows.len() != cols.len() {
        return Err(PatternError::LengthMismatch { rows: rows.len(), cols: cols.len() });
    }
    let n = a.order();
    if let Some(bad) = rows.iter().chain(cols.iter()).find(|&i| i > n) {
        return Err(PatternError::IndexOutOfRange { index: bad, n });
    }
    Ok(zero_pattern(a).is_nontrivial0(&rows.zero_based(), &cols.zero_based(), rule))
}

/// Checkerboard sign class of a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Checkerboard {
    /// `sign(a_ij) = (-1)^(i+j)` or `a_ij = 0` everywhere.
    Plus,
    /// `-A` has the checkerboard pattern.
    Minus,
    /// Only the zero matrix satisfies both.
    Both,
    Neither,
}

impl Checkerboard {
    pub fn is_checkerboard(self) -> bool {
        self != Checkerboard::Neither
    }
}

pub fn checkerboard_class(a: &RMatrix) -> Checkerboard {
    let mut plus = true;
    let mut minus = true;
    for (r, row) in a.rows().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let even = (r + c) % 2 == 0;
            let positive = v.is_positive();
            if positive != even {
                plus = false;
            } else {
                minus = false;
            }
        }
    }
    match (plus, minus) {
        (true, true) => Checkerboard::Both,
        (true, false) => Checkerboard::Plus,
        (false, true) => Checkerboard::Minus,
        (false, false) => Checkerboard::Neither,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{backward_identity, flip_rows, int};

    fn a2() -> RMatrix {
        RMatrix::from_integers(&[
            [-1, -2, 0, 0, 0, 0],
            [-4, -10, -6, -8, 0, 0],
            [0, -10, -33, -46, -9, -6],
            [0, -16, -60, -92, -60, -60],
            [0, -2, -21, -70, -242, -443],
            [0, 0, 0, -36, -316, -2823],
        ])
        .unwrap()
    }

    fn a5() -> RMatrix {
        RMatrix::from_rows(vec![
            vec![crate::exact::ratio(-1, 100000), int(-1), int(-1)],
            vec![int(-2), int(-5), int(-2)],
            vec![int(-3), int(-1), int(0)],
        ])
        .unwrap()
    }

    #[test]
    fn lexicographic_subsets() {
        let got: Vec<Vec<usize>> =
            enumerate_index_sets(2, 3).unwrap().iter().map(|s| s.as_slice().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(enumerate_index_sets(3, 3).unwrap(), vec![IndexSet::full(3)]);
        assert_eq!(enumerate_index_sets(3, 6).unwrap().len(), 20);
        assert_eq!(enumerate_index_sets(0, 3), Err(PatternError::InvalidLength { k: 0, n: 3 }));
        assert_eq!(enumerate_index_sets(4, 3), Err(PatternError::InvalidLength { k: 4, n: 3 }));
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn staircase_examples() {
        let i3 = RMatrix::identity(3);
        assert!(is_type_i_staircase(&a2()));
        assert!(is_type_i_staircase(&i3));
        assert!(!is_type_i_staircase(&a5()));
        assert!(is_type_ii_staircase(&a5()));
        assert!(is_type_ii_staircase(&backward_identity(3)));
        assert!(!is_type_ii_staircase(&i3));
        assert_eq!(staircase_type(&a2()), StaircaseType::TypeI);
        assert_eq!(staircase_type(&flip_rows(&a2())), StaircaseType::TypeII);
        assert_eq!(staircase_type(&RMatrix::from_fn(3, |_, _| int(1))), StaircaseType::Both);
        assert_eq!(staircase_type(&RMatrix::identity(1)), StaircaseType::Both);
        assert_eq!(staircase_type(&RMatrix::zeros(2)), StaircaseType::Neither);
    }

    #[test]
    fn broken_propagation_is_rejected() {
        // zero at (2,1) does not reach (3,1)
        let m = RMatrix::from_integers(&[[1, 1, 1], [0, 1, 1], [1, 1, 1]]).unwrap();
        assert!(!is_type_i_staircase(&m));
        let m = RMatrix::from_integers(&[[1, 1, 0], [1, 1, 1], [1, 1, 1]]).unwrap();
        assert!(is_type_i_staircase(&m));
        let m = RMatrix::from_integers(&[[1, 1, 1], [1, 1, 0], [1, 1, 1]]).unwrap();
        assert!(!is_type_i_staircase(&m));
    }

    #[test]
    fn nontrivial_submatrices() {
        let a4 = RMatrix::from_integers(&[[1, 2, 0], [2, 4, 3], [2, 5, 8]]).unwrap();
        let r12 = IndexSet::range(1, 2);
        assert!(is_nontrivial(&a4, &r12, &r12, StaircaseType::TypeI).unwrap());
        assert!(!is_nontrivial(&a2(), &r12, &IndexSet::range(5, 6), StaircaseType::TypeI).unwrap());
        let i2 = RMatrix::identity(2);
        assert!(!is_nontrivial(&i2, &r12, &r12, StaircaseType::TypeII).unwrap());
        assert_eq!(
            is_nontrivial(&i2, &r12, &r12, StaircaseType::Both),
            Err(PatternError::InvalidType(StaircaseType::Both))
        );
    }

    #[test]
    fn checkerboard_examples() {
        assert_eq!(checkerboard_class(&RMatrix::identity(3)), Checkerboard::Plus);
        assert_eq!(checkerboard_class(&a2()), Checkerboard::Neither);
        assert_eq!(checkerboard_class(&RMatrix::identity(3).neg()), Checkerboard::Minus);
        assert_eq!(checkerboard_class(&RMatrix::zeros(2)), Checkerboard::Both);
    }

    #[test]
    fn pattern_equality() {
        let i3 = zero_pattern(&RMatrix::identity(3));
        assert!(patterns_equal(&i3, &i3).unwrap());
        assert!(!patterns_equal(&i3, &zero_pattern(&backward_identity(3))).unwrap());
        assert!(patterns_equal(&i3, &zero_pattern(&RMatrix::identity(2))).is_err());
        assert_eq!(zero_pattern(&a2()).count_zeros(), 12);
    }
}
