use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use super::det::Minors;
use super::rational::{format_rational, int, Rational};
use super::{IndexSet, MatrixError};

/// Threshold up to which inverses are formed from the adjugate.
const ADJUGATE_MAX_ORDER: usize = 8;

/// Dense square matrix of exact rationals. Public indexing is 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RMatrix {
    /// Builds a matrix from rows; every row must have exactly as many entries
    /// as there are rows.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::NotSquare { row: i + 1, len: row.len(), n });
            }
            data.extend(row);
        }
        Ok(RMatrix { n, data })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&v| int(v)).collect()).collect())
    }

    /// `f` receives 1-based `(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(n >= 1, "matrix order must be positive");
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                data.push(f(i, j));
            }
        }
        RMatrix { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| Rational::zero())
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (k, v) in entries.into_iter().enumerate() {
            m.data[k * n + k] = v;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "({i},{j}) out of range");
        &self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<&Rational, MatrixError> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.get(i, j))
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.n + c]
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.get(i, j).is_zero()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.n)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rational> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.rows().map(<[Rational]>::to_vec).collect()
    }

    /// Copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: Rational) -> Self {
        let mut m = self.clone();
        m.data[(i - 1) * self.n + (j - 1)] = value;
        m
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        RMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn neg(&self) -> Self {
        self.map(|r| -r)
    }

    /// Entrywise absolute value `|A|`.
    pub fn abs(&self) -> Self {
        self.map(|r| r.abs())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|r| !r.is_negative())
    }

    pub fn is_nonpositive(&self) -> bool {
        self.data.iter().all(|r| !r.is_positive())
    }

    pub fn has_positive_entry(&self) -> bool {
        self.data.iter().any(Signed::is_positive)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| r == c || self.at(r, c).is_zero()))
    }

    pub fn matmul(&self, other: &RMatrix) -> Result<RMatrix, MatrixError> {
        self.check_same_order(other)?;
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    let (x, y) = (self.at(r, k), other.at(k, c));
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                data.push(acc);
            }
        }
        Ok(RMatrix { n, data })
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &RMatrix) -> Result<RMatrix, MatrixError> {
        self.check_same_order(other)?;
        let data = self.data.iter().zip(&other.data).map(|(x, y)| x * y).collect();
        Ok(RMatrix { n: self.n, data })
    }

    pub fn det(&self) -> Rational {
        Minors::new(self).det()
    }

    pub fn is_singular(&self) -> bool {
        self.det().is_zero()
    }

    /// `A_ij`: determinant of `A` with row `i` and column `j` removed.
    pub fn complementary_minor(&self, i: usize, j: usize) -> Result<Rational, MatrixError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if self.n < 2 {
            return Err(MatrixError::OrderTooSmall { n: self.n, min: 2 });
        }
        Ok(Minors::new(self).complementary0(i - 1, j - 1))
    }

    /// `A[rows|cols]`.
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<RMatrix, MatrixError> {
        if rows.len() != cols.len() {
            return Err(MatrixError::DimensionMismatch { left: rows.len(), right: cols.len() });
        }
        for idx in rows.iter().chain(cols.iter()) {
            self.check_index(idx)?;
        }
        let (r, c) = (rows.as_slice(), cols.as_slice());
        Ok(Self::from_fn(rows.len(), |i, j| self.get(r[i - 1], c[j - 1]).clone()))
    }

    /// `det A[rows|cols]`.
    pub fn minor(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Rational, MatrixError> {
        Ok(self.submatrix(rows, cols)?.det())
    }

    /// Exact inverse: adjugate for `n <= 8`, Gauss-Jordan otherwise.
    pub fn inverse(&self) -> Result<RMatrix, MatrixError> {
        if self.n <= ADJUGATE_MAX_ORDER {
            self.inverse_adjugate()
        } else {
            self.inverse_elimination()
        }
    }

    /// `A^{-1} = adj(A) / det A`.
    pub fn inverse_adjugate(&self) -> Result<RMatrix, MatrixError> {
        let minors = Minors::new(self);
        let det = minors.det();
        if det.is_zero() {
            return Err(MatrixError::Singular);
        }
        if self.n == 1 {
            return Ok(RMatrix { n: 1, data: vec![det.recip()] });
        }
        let n = self.n;
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let cof = minors.complementary0(i, j) / &det;
                // inverse entry (j, i) is the (i, j) cofactor over det
                data[j * n + i] = if (i + j) % 2 == 0 { cof } else { -cof };
            }
        }
        Ok(RMatrix { n, data })
    }

    /// Gauss-Jordan elimination over the rationals.
    pub fn inverse_elimination(&self) -> Result<RMatrix, MatrixError> {
        let n = self.n;
        let mut left = self.data.clone();
        let mut right = Self::identity(n).data;
        for k in 0..n {
            let pivot = (k..n).find(|&r| !left[r * n + k].is_zero()).ok_or(MatrixError::Singular)?;
            if pivot != k {
                for c in 0..n {
                    left.swap(k * n + c, pivot * n + c);
                    right.swap(k * n + c, pivot * n + c);
                }
            }
            let inv = left[k * n + k].recip();
            for c in 0..n {
                left[k * n + c] *= &inv;
                right[k * n + c] *= &inv;
            }
            for r in 0..n {
                if r == k || left[r * n + k].is_zero() {
                    continue;
                }
                let factor = left[r * n + k].clone();
                for c in 0..n {
                    let (lk, rk) = (left[k * n + c].clone(), right[k * n + c].clone());
                    left[r * n + c] -= &factor * lk;
                    right[r * n + c] -= &factor * rk;
                }
            }
        }
        Ok(RMatrix { n, data: right })
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<(), MatrixError> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(MatrixError::IndexOutOfRange { index: i, n: self.n })
        }
    }

    pub(crate) fn check_same_order(&self, other: &RMatrix) -> Result<(), MatrixError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(MatrixError::DimensionMismatch { left: self.n, right: other.n })
        }
    }
}

impl Mul for &RMatrix {
    type Output = RMatrix;

    /// Panics on order mismatch; use [`RMatrix::matmul`] for a checked product.
    fn mul(self, rhs: &RMatrix) -> RMatrix {
        self.matmul(rhs).expect("matrix orders differ")
    }
}

/// `P_n`: ones on the backward diagonal (`i + j = n + 1`).
pub fn backward_identity(n: usize) -> RMatrix {
    RMatrix::from_fn(n, |i, j| if i + j == n + 1 { Rational::one() } else { Rational::zero() })
}

/// `S_n = diag(1, -1, 1, ...)`.
pub fn alternating_sign(n: usize) -> RMatrix {
    RMatrix::from_fn(n, |i, j| match (i == j, i % 2) {
        (false, _) => Rational::zero(),
        (true, 1) => Rational::one(),
        (true, _) => -Rational::one(),
    })
}

/// `P_n A`: rows in reverse order.
pub fn flip_rows(a: &RMatrix) -> RMatrix {
    let n = a.order();
    RMatrix::from_fn(n, |i, j| a.get(n + 1 - i, j).clone())
}

/// `S_n A S_n`: negates entries with `i + j` odd.
pub fn checkerboard_conjugate(a: &RMatrix) -> RMatrix {
    RMatrix::from_fn(a.order(), |i, j| {
        let v = a.get(i, j);
        if (i + j) % 2 == 0 {
            v.clone()
        } else {
            -v
        }
    })
}

impl fmt::Debug for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RMatrix{}", self)
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                f.write_str(&format_rational(v))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
