//! Fraction-free determinants.
//!
//! Rational matrices are brought to integers by scaling every row with the
//! lcm of its denominators. Minors of the scaled matrix differ from the true
//! minors only by the positive product of the selected row scales, so signs
//! can be read directly and values are recovered with a single exact
//! division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{Rational, Sign};
use super::{IndexSet, RMatrix};

/// Determinant of a dense `n x n` integer matrix (row-major) by Bareiss
/// elimination with row pivoting. Consumes the buffer as scratch space.
pub fn bareiss_det(mut m: Vec<BigInt>, n: usize) -> BigInt {
    debug_assert_eq!(m.len(), n * n);
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in k..n {
                m.swap(k * n + c, pivot * n + c);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                // Sylvester's identity guarantees exact division.
                m[i * n + j] = v / &prev;
            }
        }
        prev = m[k * n + k].clone();
    }
    let det = m.swap_remove(n * n - 1);
    if negate {
        -det
    } else {
        det
    }
}

/// Denominator-cleared copy of a rational matrix for repeated minor
/// evaluation.
#[derive(Clone, Debug)]
pub struct Minors {
    n: usize,
    data: Vec<BigInt>,
    row_scale: Vec<BigInt>,
}

impl Minors {
    pub fn new(a: &RMatrix) -> Self {
        let n = a.order();
        let mut data = Vec::with_capacity(n * n);
        let mut row_scale = Vec::with_capacity(n);
        for row in a.rows() {
            let scale = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            for r in row {
                data.push(r.numer() * (&scale / r.denom()));
            }
            row_scale.push(scale);
        }
        Minors { n, data, row_scale }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Integer minor of the scaled matrix on 0-based rows/cols.
    fn scaled(&self, rows: &[usize], cols: &[usize]) -> BigInt {
        debug_assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        match k {
            1 => self.data[rows[0] * self.n + cols[0]].clone(),
            2 => {
                let at = |r: usize, c: usize| &self.data[rows[r] * self.n + cols[c]];
                at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0)
            }
            _ => {
                let mut buf = Vec::with_capacity(k * k);
                for &r in rows {
                    for &c in cols {
                        buf.push(self.data[r * self.n + c].clone());
                    }
                }
                bareiss_det(buf, k)
            }
        }
    }

    /// Sign of `det A[rows|cols]` for 0-based index slices.
    pub(crate) fn sign0(&self, rows: &[usize], cols: &[usize]) -> Sign {
        Sign::of_int(&self.scaled(rows, cols))
    }

    /// Exact value of `det A[rows|cols]` for 0-based index slices.
    pub(crate) fn value0(&self, rows: &[usize], cols: &[usize]) -> Rational {
        let scale = rows
            .iter()
            .fold(BigInt::one(), |acc, &r| acc * &self.row_scale[r]);
        Rational::new(self.scaled(rows, cols), scale)
    }

    pub fn sign(&self, rows: &IndexSet, cols: &IndexSet) -> Sign {
        self.sign0(&rows.zero_based(), &cols.zero_based())
    }

    pub fn value(&self, rows: &IndexSet, cols: &IndexSet) -> Rational {
        self.value0(&rows.zero_based(), &cols.zero_based())
    }

    /// Determinant of the whole matrix.
    pub fn det(&self) -> Rational {
        let all: Vec<usize> = (0..self.n).collect();
        self.value0(&all, &all)
    }

    /// `A_ij` for 0-based `i`, `j`, with `n >= 2`.
    pub(crate) fn complementary0(&self, i: usize, j: usize) -> Rational {
        let rows: Vec<usize> = (0..self.n).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.n).filter(|&c| c != j).collect();
        self.value0(&rows, &cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_integer_determinants() {
        assert_eq!(bareiss_det(ints(&[7]), 1), BigInt::from(7));
        assert_eq!(bareiss_det(ints(&[1, 2, 3, 4]), 2), BigInt::from(-2));
        // needs a pivot swap at the first step
        assert_eq!(bareiss_det(ints(&[0, 1, 1, 0]), 2), BigInt::from(-1));
        assert_eq!(bareiss_det(ints(&[0, 0, 1, 0, 1, 0, 1, 0, 0]), 3), BigInt::from(-1));
        assert_eq!(bareiss_det(ints(&[1, 2, 3, 2, 4, 6, 1, 1, 1]), 3), BigInt::zero());
        assert_eq!(
            bareiss_det(ints(&[-1, -3, -5, -1, -6, -10, -1, -15, -29]), 3),
            BigInt::from(-12)
        );
    }

    #[test]
    fn scaled_minors_recover_rational_values() {
        use crate::exact::rational::ratio;
        let a = RMatrix::from_rows(vec![vec![ratio(1, 1), ratio(3, 2)], vec![ratio(3, 2), ratio(4, 5)]]).unwrap();
        let m = Minors::new(&a);
        assert_eq!(m.det(), ratio(-29, 20));
        assert_eq!(m.sign0(&[0, 1], &[0, 1]), Sign::Negative);
        assert_eq!(m.value0(&[1], &[0]), ratio(3, 2));
    }
}
