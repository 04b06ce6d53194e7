//! Exact Gaussian elimination over a field.
//!
//! Used to settle eigenvalue candidates that sit exactly on an integer, where
//! floating point cannot tell a genuine tie from a near miss.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

use super::SymmetricMatrix;

pub type Rational = BigRational;

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
pub fn rref<F: Num + Clone>(rows: &mut [Vec<F>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..ncols {
                let sub = f.clone() * rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - sub;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel, one vector per free column (free entry set to 1).
pub fn kernel_basis<F: Num + Clone>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = F::zero() - rows[r][f].clone();
            }
            v
        })
        .collect()
}

/// Nullity of `m − c·I` over the rationals, with a kernel basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactKernel {
    pub nullity: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl ExactKernel {
    pub fn basis_f64(&self) -> Vec<Vec<f64>> {
        self.basis.iter().map(|v| v.iter().map(rational_to_f64).collect()).collect()
    }
}

pub fn exact_kernel_dim(m: &SymmetricMatrix<i64>, c: i64) -> ExactKernel {
    let n = m.order();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = m[(i, j)] - if i == j { c } else { 0 };
                    Rational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let basis = kernel_basis(rows, n);
    ExactKernel { nullity: basis.len(), basis }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact sign of each entry: -1, 0 or 1.
pub fn signs(v: &[Rational]) -> Vec<i8> {
    v.iter()
        .map(|q| {
            if q.is_zero() {
                0
            } else if q.is_positive() {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// `m·x == c·x` checked in exact arithmetic.
pub fn is_exact_eigenvector(m: &SymmetricMatrix<i64>, x: &[Rational], c: i64) -> bool {
    let n = m.order();
    let cq = Rational::from_integer(BigInt::from(c));
    (0..n).all(|i| {
        let lhs = (0..n).fold(Rational::zero(), |acc, j| acc + Rational::from_integer(BigInt::from(m[(i, j)])) * x[j].clone());
        lhs == cq.clone() * x[i].clone()
    }) && x.iter().any(|q| !q.is_zero())
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
