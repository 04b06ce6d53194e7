use super::{LinalgError, SymmetricMatrix};
use crate::scalar::Real;
use crate::tol;

pub const MAX_SWEEPS: usize = 100;

/// Full spectrum of a symmetric matrix, eigenvalues nondecreasing.
#[derive(Debug, Clone)]
pub struct EigenSystem<T> {
    pub values: Vec<T>,
    /// Orthonormal eigenvectors, `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<T>>,
    /// `max_k ‖A v_k − λ_k v_k‖∞`.
    pub residual_bound: T,
}

impl<T: Real> EigenSystem<T> {
    pub fn smallest(&self) -> T {
        self.values[0]
    }

    pub fn largest(&self) -> T {
        *self.values.last().expect("nonempty spectrum")
    }

    /// Number of eigenvalues within `tol` of the smallest one.
    pub fn multiplicity_of_smallest(&self, tol: T) -> usize {
        let l1 = self.values[0];
        self.values.iter().take_while(|&&v| v - l1 <= tol).count()
    }
}

/// Cyclic Jacobi eigendecomposition.
///
/// Sweeps over all off-diagonal pairs, annihilating each with a plane rotation,
/// until the off-diagonal Frobenius norm falls below machine precision relative
/// to the full norm. Eigenvectors come out orthonormal to rounding, which the
/// multiplicity detection relies on.
pub fn full_spectrum<T: Real>(m: &SymmetricMatrix<T>) -> Result<EigenSystem<T>, LinalgError> {
    let n = m.order();
    if n == 0 {
        return Ok(EigenSystem { values: vec![], vectors: vec![], residual_bound: T::zero() });
    }
    let mut a = m.to_rows();
    let mut v: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect();

    let total: T = a.iter().flatten().map(|&x| x * x).sum();
    let target = (T::epsilon() * T::epsilon()) * total;
    let off = |a: &Vec<Vec<T>>| -> T {
        let mut s = T::zero();
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[i][j] * a[i][j];
            }
        }
        s * T::of(2.0)
    };

    let mut sweeps = 0;
    loop {
        let o = off(&a);
        if o <= target || o == T::zero() {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NoConvergence { sweeps, off_norm: o.sqrt().to_f64_lossy() });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p][p];
                let aqq = a[q][q];
                // skip entries already negligible against both diagonals
                let g = T::of(100.0) * apq.abs();
                if sweeps > 4 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p][q] = T::zero();
                    a[q][p] = T::zero();
                    continue;
                }
                let theta = (aqq - app) / (T::of(2.0) * apq);
                let t = {
                    let r = (theta * theta + T::one()).sqrt();
                    let t = T::one() / (theta.abs() + r);
                    if theta < T::zero() { -t } else { t }
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);

                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = T::zero();
                a[q][p] = T::zero();
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    let nrp = arp - s * (arq + tau * arp);
                    let nrq = arq + s * (arp - tau * arq);
                    a[r][p] = nrp;
                    a[p][r] = nrp;
                    a[r][q] = nrq;
                    a[q][r] = nrq;
                }
                for row in v.iter_mut() {
                    let vp = row[p];
                    let vq = row[q];
                    row[p] = vp - s * (vq + tau * vp);
                    row[q] = vq + s * (vp - tau * vq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).expect("finite eigenvalues"));
    let values: Vec<T> = order.iter().map(|&k| a[k][k]).collect();
    let vectors: Vec<Vec<T>> = order.iter().map(|&k| (0..n).map(|i| v[i][k]).collect()).collect();

    let mut residual = T::zero();
    for (lam, x) in values.iter().zip(&vectors) {
        let ax = m.mul_vec(x);
        for (y, xi) in ax.iter().zip(x) {
            residual = residual.max((*y - *lam * *xi).abs());
        }
    }
    let tolerance = tol::eig_tol::<T>() * (T::one() + m.norm_inf());
    if residual > tolerance {
        return Err(LinalgError::ResidualTooLarge { residual: residual.to_f64_lossy(), tolerance: tolerance.to_f64_lossy() });
    }
    Ok(EigenSystem { values, vectors, residual_bound: residual })
}
