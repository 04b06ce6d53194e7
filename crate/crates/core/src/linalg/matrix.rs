use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use super::LinalgError;
use crate::scalar::Real;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "Vec<Vec<T>>",
    into = "Vec<Vec<T>>",
    bound(serialize = "T: Clone + Serialize", deserialize = "T: Clone + Deserialize<'de>")
)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from a list of rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(LinalgError::RaggedRows { row: i, expected: ncols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols: ncols, data })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    pub fn matmul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<T> {
        (0..self.rows).map(|i| self.row(i).iter().copied().sum()).collect()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &v| m.max(v.abs()))
    }

    pub fn min_entry(&self) -> T {
        self.data.iter().fold(T::infinity(), |m, &v| m.min(v))
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> T {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.abs()).sum::<T>())
            .fold(T::zero(), T::max)
    }

    /// Gauss-Jordan inverse with partial pivoting.
    pub fn inverse(&self) -> Result<Matrix<T>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        let scale = self.max_abs().max(T::min_positive_value());
        let tiny = T::epsilon() * T::of_usize(n.max(1)) * scale;
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[(x, col)].abs().partial_cmp(&a[(y, col)].abs()).unwrap())
                .unwrap();
            if a[(pivot, col)].abs() <= tiny {
                return Err(LinalgError::Singular);
            }
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[(r, col)];
                if f == T::zero() {
                    continue;
                }
                for j in 0..n {
                    let (ac, ic) = (a[(col, j)], inv[(col, j)]);
                    a[(r, j)] -= f * ac;
                    inv[(r, j)] -= f * ic;
                }
            }
        }
        Ok(inv)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone> TryFrom<Vec<Vec<T>>> for Matrix<T> {
    type Error = LinalgError;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Self, Self::Error> {
        Matrix::from_rows(rows)
    }
}

impl<T: Clone> From<Matrix<T>> for Vec<Vec<T>> {
    fn from(m: Matrix<T>) -> Self {
        m.to_rows()
    }
}

/// Square matrix with `a[i][j] == a[j][i]` guaranteed at construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "Vec<Vec<T>>",
    into = "Vec<Vec<T>>",
    bound(
        serialize = "T: Clone + PartialEq + Serialize",
        deserialize = "T: Clone + PartialEq + Deserialize<'de>"
    )
)]
pub struct SymmetricMatrix<T> {
    inner: Matrix<T>,
}

impl<T: Clone + PartialEq> SymmetricMatrix<T> {
    /// Evaluates `f` on the upper triangle (`i <= j`) and mirrors it.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut upper = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                upper.push(f(i, j));
            }
        }
        let idx = |i: usize, j: usize| {
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            a * n - a * (a + 1) / 2 + b
        };
        SymmetricMatrix { inner: Matrix::from_fn(n, n, |i, j| upper[idx(i, j)].clone()) }
    }

    /// Wraps a square matrix; entries must be exactly symmetric.
    pub fn from_matrix(m: Matrix<T>) -> Result<Self, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        let n = m.nrows();
        for i in 0..n {
            for j in (i + 1)..n {
                if m[(i, j)] != m[(j, i)] {
                    return Err(LinalgError::NotSymmetric { i, j });
                }
            }
        }
        Ok(SymmetricMatrix { inner: m })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        Self::from_matrix(Matrix::from_rows(rows)?)
    }

    pub fn order(&self) -> usize {
        self.inner.nrows()
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.inner[(j, i)] = v.clone();
        self.inner[(i, j)] = v;
    }

    pub fn as_matrix(&self) -> &Matrix<T> {
        &self.inner
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.inner
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.inner.to_rows()
    }

    /// Principal submatrix on the given (sorted or unsorted) index list.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        SymmetricMatrix {
            inner: Matrix::from_fn(idx.len(), idx.len(), |a, b| self.inner[(idx[a], idx[b])].clone()),
        }
    }

    pub fn map<U: Clone + PartialEq>(&self, f: impl Fn(&T) -> U) -> SymmetricMatrix<U> {
        SymmetricMatrix { inner: self.inner.map(f) }
    }
}

impl<T: Real> SymmetricMatrix<T> {
    pub fn identity(n: usize) -> Self {
        SymmetricMatrix { inner: Matrix::identity(n) }
    }

    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { inner: Matrix::zeros(n, n) }
    }

    /// Symmetrizes a nearly symmetric square matrix as `(M + Mᵀ)/2`.
    pub fn symmetrize(m: &Matrix<T>) -> Result<Self, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        let half = T::of(0.5);
        Ok(Self::from_upper(m.nrows(), |i, j| if i == j { m[(i, i)] } else { half * (m[(i, j)] + m[(j, i)]) }))
    }

    /// `self + c·I`.
    pub fn shifted(&self, c: T) -> Self {
        let mut out = self.clone();
        for i in 0..self.order() {
            out.inner[(i, i)] += c;
        }
        out
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        self.inner.mul_vec(x)
    }

    pub fn trace(&self) -> T {
        (0..self.order()).map(|i| self.inner[(i, i)]).sum()
    }

    pub fn frobenius_sq(&self) -> T {
        self.inner.entries().map(|&v| v * v).sum()
    }

    pub fn norm_inf(&self) -> T {
        self.inner.norm_inf()
    }

    pub fn row_sums(&self) -> Vec<T> {
        self.inner.row_sums()
    }

    pub fn quadratic_form(&self, x: &[T]) -> T {
        self.mul_vec(x).iter().zip(x).map(|(&a, &b)| a * b).sum()
    }

    /// Largest off-diagonal entry; `-inf` for order ≤ 1.
    pub fn max_offdiagonal(&self) -> T {
        let n = self.order();
        let mut m = T::neg_infinity();
        for i in 0..n {
            for j in (i + 1)..n {
                m = m.max(self.inner[(i, j)]);
            }
        }
        m
    }

    /// Inverse via Gauss-Jordan, re-symmetrized.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        Self::symmetrize(&self.inner.inverse()?)
    }
}

impl<T> Index<(usize, usize)> for SymmetricMatrix<T> {
    type Output = T;
    fn index(&self, ij: (usize, usize)) -> &T {
        &self.inner[ij]
    }
}

impl<T: Clone + PartialEq> TryFrom<Vec<Vec<T>>> for SymmetricMatrix<T> {
    type Error = LinalgError;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Self, Self::Error> {
        SymmetricMatrix::from_rows(rows)
    }
}

impl<T: Clone> From<SymmetricMatrix<T>> for Vec<Vec<T>> {
    fn from(m: SymmetricMatrix<T>) -> Self {
        m.inner.to_rows()
    }
}
