//! The combined matrix `C(A) = A ∘ (A^{-1})^T`, computed by two independent
//! routes.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{MatrixError, Minors, RMatrix, Rational};
use crate::par::{self, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Route {
    /// `c_ij = (-1)^(i+j) a_ij A_ij / det A`.
    CofactorFormula,
    /// `A ∘ (A^{-1})^T` with an exact inverse.
    InverseHadamard,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinedResult {
    pub c: RMatrix,
    pub det: Rational,
    pub route: Route,
}

/// `C(A)` by the cofactor formula.
pub fn combined(a: &RMatrix) -> Result<CombinedResult, MatrixError> {
    combined_with(a, Execution::default())
}

/// Cofactor route with an explicit execution mode; the `n^2`
/// complementary minors are independent.
pub fn combined_with(a: &RMatrix, exec: Execution) -> Result<CombinedResult, MatrixError> {
    let minors = Minors::new(a);
    let det = minors.det();
    if det.is_zero() {
        return Err(MatrixError::Singular);
    }
    let n = a.order();
    if n == 1 {
        return Ok(CombinedResult { c: RMatrix::identity(1), det, route: Route::CofactorFormula });
    }
    let entries = par::map_range(exec, n * n, |k| {
        let (r, c) = (k / n, k % n);
        let a_rc = a.at(r, c);
        if a_rc.is_zero() {
            return Rational::zero();
        }
        let v = a_rc * minors.complementary0(r, c) / &det;
        if (r + c) % 2 == 0 {
            v
        } else {
            -v
        }
    });
    let mut it = entries.into_iter();
    let c = RMatrix::from_fn(n, |_, _| it.next().expect("n*n entries"));
    Ok(CombinedResult { c, det, route: Route::CofactorFormula })
}

/// `C(A)` as the Hadamard product of `A` with the transposed exact inverse.
pub fn combined_via_inverse(a: &RMatrix) -> Result<CombinedResult, MatrixError> {
    let inv = a.inverse()?;
    let c = a.hadamard(&inv.transpose())?;
    Ok(CombinedResult { c, det: a.det(), route: Route::InverseHadamard })
}

/// Exact row sums and column sums.
pub fn row_col_sums(c: &RMatrix) -> (Vec<Rational>, Vec<Rational>) {
    let n = c.order();
    let rows = c.rows().map(|row| row.iter().sum()).collect();
    let cols = (1..=n).map(|j| (1..=n).map(|i| c.get(i, j)).sum()).collect();
    (rows, cols)
}

/// Every row and column of `c` sums to exactly one.
pub fn sums_are_one(c: &RMatrix) -> bool {
    let (rows, cols) = row_col_sums(c);
    rows.iter().chain(&cols).all(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{backward_identity, int, parse_rational, ratio};

    fn m(rows: &[&[&str]]) -> RMatrix {
        RMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect()).collect())
            .unwrap()
    }

    #[test]
    fn golden_small_fixtures() {
        let a1 = RMatrix::from_integers(&[[-1, -3, -5], [-1, -6, -10], [-1, -15, -29]]).unwrap();
        let expected = m(&[&["2", "-19/4", "15/4"], &["-1", "12", "-10"], &["0", "-25/4", "29/4"]]);
        assert_eq!(combined(&a1).unwrap().c, expected);
        assert_eq!(combined_via_inverse(&a1).unwrap().c, expected);

        let a3 = RMatrix::from_integers(&[[-1, -2, 0], [-1, -3, 0], [-1, -4, -5]]).unwrap();
        let expected = RMatrix::from_integers(&[[3, -2, 0], [-2, 3, 0], [0, 0, 1]]).unwrap();
        assert_eq!(combined(&a3).unwrap().c, expected);
        assert_eq!(combined(&a3).unwrap().det, int(-5));
    }

    #[test]
    fn triangular_and_permutation_inputs() {
        assert_eq!(combined(&RMatrix::identity(4)).unwrap().c, RMatrix::identity(4));
        let t = RMatrix::from_integers(&[[2, 7, -1], [0, 3, 5], [0, 0, -4]]).unwrap();
        assert_eq!(combined(&t).unwrap().c, RMatrix::identity(3));
        assert_eq!(combined(&t.transpose()).unwrap().c, RMatrix::identity(3));
        assert_eq!(combined_via_inverse(&backward_identity(3)).unwrap().c, backward_identity(3));
    }

    #[test]
    fn a4_entries() {
        let a4 = RMatrix::from_integers(&[[1, 2, 0], [2, 4, 3], [2, 5, 8]]).unwrap();
        let c = combined_via_inverse(&a4).unwrap().c;
        assert_eq!(c.get(3, 3), &int(0));
        assert_eq!(c.get(1, 1), &ratio(-17, 3));
    }

    #[test]
    fn singular_input() {
        let s = RMatrix::from_integers(&[[1, 1], [1, 1]]).unwrap();
        assert_eq!(combined(&s), Err(MatrixError::Singular));
        assert_eq!(combined_via_inverse(&s), Err(MatrixError::Singular));
    }

    #[test]
    fn sums() {
        let a1 = RMatrix::from_integers(&[[-1, -3, -5], [-1, -6, -10], [-1, -15, -29]]).unwrap();
        let (rows, cols) = row_col_sums(&combined(&a1).unwrap().c);
        assert!(rows.iter().chain(&cols).all(|s| *s == int(1)));
        assert!(sums_are_one(&RMatrix::identity(3)));
        assert!(!sums_are_one(&RMatrix::zeros(2)));
    }

    #[test]
    fn execution_modes_agree() {
        let a = RMatrix::from_integers(&[[4, 1, 0, 2], [1, 3, 1, 0], [0, 1, 5, 1], [2, 0, 1, 6]]).unwrap();
        assert_eq!(
            combined_with(&a, Execution::Sequential).unwrap(),
            combined_with(&a, Execution::Parallel).unwrap()
        );
    }
}
