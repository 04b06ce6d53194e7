use super::{LinalgError, SymmetricMatrix};
use crate::scalar::Real;

/// Lower-triangular factor `L` with `A = L Lᵀ`.
#[derive(Debug, Clone)]
pub struct Cholesky<T> {
    n: usize,
    // packed row-major lower triangle
    l: Vec<T>,
}

impl<T: Real> Cholesky<T> {
    pub fn factor(a: &SymmetricMatrix<T>) -> Result<Self, LinalgError> {
        let n = a.order();
        let mut l = vec![T::zero(); n * (n + 1) / 2];
        let at = |i: usize, j: usize| i * (i + 1) / 2 + j;
        // pivots at rounding level of the diagonal count as zero
        let scale = (0..n).fold(T::zero(), |m, i| m.max(a[(i, i)].abs()));
        let floor = T::epsilon() * T::of_usize(16 * n.max(1)) * scale;
        for i in 0..n {
            for j in 0..=i {
                let mut sum = a[(i, j)];
                for k in 0..j {
                    sum -= l[at(i, k)] * l[at(j, k)];
                }
                if i == j {
                    if sum <= floor || !sum.is_finite() {
                        return Err(LinalgError::NotPositiveDefinite { pivot: i, value: sum.to_f64_lossy() });
                    }
                    l[at(i, i)] = sum.sqrt();
                } else {
                    l[at(i, j)] = sum / l[at(j, j)];
                }
            }
        }
        Ok(Cholesky { n, l })
    }

    fn get(&self, i: usize, j: usize) -> T {
        self.l[i * (i + 1) / 2 + j]
    }

    pub fn solve(&self, b: &[T]) -> Vec<T> {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            let mut s = y[i];
            for k in 0..i {
                s -= self.get(i, k) * y[k];
            }
            y[i] = s / self.get(i, i);
        }
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in (i + 1)..n {
                s -= self.get(k, i) * y[k];
            }
            y[i] = s / self.get(i, i);
        }
        y
    }

    /// `A⁻¹` by solving against the identity columns.
    pub fn inverse(&self) -> SymmetricMatrix<T> {
        let n = self.n;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            cols.push(self.solve(&e));
        }
        let half = T::of(0.5);
        SymmetricMatrix::from_upper(n, |i, j| if i == j { cols[i][i] } else { half * (cols[j][i] + cols[i][j]) })
    }

    pub fn log_det(&self) -> T {
        (0..self.n).map(|i| self.get(i, i).ln()).sum::<T>() * T::of(2.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_spd_system() {
        let a = SymmetricMatrix::<f64>::from_rows(vec![vec![4.0, 1.0, 0.0], vec![1.0, 3.0, 1.0], vec![0.0, 1.0, 2.0]]).unwrap();
        let ch = Cholesky::factor(&a).unwrap();
        let x = ch.solve(&[1.0, 2.0, 3.0]);
        let back = a.mul_vec(&x);
        for (u, v) in back.iter().zip([1.0, 2.0, 3.0]) {
            assert!((u - v).abs() < 1e-13);
        }
        let inv = ch.inverse();
        let gj = a.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((inv[(i, j)] - gj[(i, j)]).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn indefinite_rejected() {
        let a = SymmetricMatrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(Cholesky::factor(&a), Err(LinalgError::NotPositiveDefinite { pivot: 1, .. })));
    }
}
