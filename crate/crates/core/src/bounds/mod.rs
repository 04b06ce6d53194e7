//! Bounds on inverses of the diagonally dominant blocks that appear in
//! `R_μ` when G has maximum degree two.

mod sweep;

pub use sweep::{baigolub_sweep, cycle_sweep, path_sweep, BoundRow};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{full_spectrum, Cholesky, LinalgError, SymmetricMatrix};
use crate::spectra::signless_laplacian;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("eigenvalue bracket [{a}, {b}] is invalid")]
    BadBracket { a: f64, b: f64 },
    #[error("spectrum [{lo}, {hi}] not inside [{a}, {b}]")]
    BracketViolated { a: f64, b: f64, lo: f64, hi: f64 },
    #[error("row {0} is not strictly diagonally dominant")]
    NotDiagonallyDominant(usize),
    #[error("shift {0} must be positive")]
    NonPositiveShift(f64),
    #[error("cycle length {0} is below 3")]
    ShortCycle(usize),
    #[error("Sherman–Morrison denominator vanishes")]
    SingularUpdate,
}

/// `[m₁ n] [[m₂, m₁], [c², c]]⁻¹ [n; 1]`. When `m₂ = c·m₁` every eigenvalue
/// equals `c` and the expression is replaced by its limit `n / c`.
fn bai_golub_form(n: f64, m1: f64, m2: f64, c: f64) -> f64 {
    let det = m2 * c - m1 * c * c;
    if det.abs() <= 1e-12 * (m2 * c).abs().max(f64::MIN_POSITIVE) {
        return n / c;
    }
    (m1 * (c * n - m1) + n * (m2 - c * c * n)) / det
}

/// Lower and upper bounds on `Tr A⁻¹` from `m₁ = Tr A`, `m₂ = ‖A‖_F²` and an
/// eigenvalue bracket `[a, b]`, `a > 0`.
pub fn bai_golub_trace_bounds(m: &SymmetricMatrix<f64>, a: f64, b: f64) -> Result<(f64, f64), BoundsError> {
    if !(a > 0.0 && a <= b) {
        return Err(BoundsError::BadBracket { a, b });
    }
    let es = full_spectrum(m)?;
    let (lo, hi) = (es.smallest(), es.largest());
    let slack = 1e-10 * (1.0 + hi.abs());
    if lo < a - slack || hi > b + slack {
        return Err(BoundsError::BracketViolated { a, b, lo, hi });
    }
    let n = m.order() as f64;
    let (m1, m2) = (m.trace(), m.frobenius_sq());
    Ok((bai_golub_form(n, m1, m2, b), bai_golub_form(n, m1, m2, a)))
}

/// For each column `i`, `max_{l≠i} |a_li| / (|a_ll| − Σ_{k≠l,i} |a_lk|)`,
/// which bounds `|ã_ji| / |ã_ii|` for `j ≠ i`.
pub fn diag_dominance_inverse_bound(m: &SymmetricMatrix<f64>) -> Result<Vec<f64>, BoundsError> {
    let n = m.order();
    let abs_row: Vec<f64> = (0..n).map(|l| (0..n).filter(|&k| k != l).map(|k| m[(l, k)].abs()).sum()).collect();
    for l in 0..n {
        if m[(l, l)].abs() <= abs_row[l] {
            return Err(BoundsError::NotDiagonallyDominant(l));
        }
    }
    Ok((0..n)
        .map(|i| {
            (0..n)
                .filter(|&l| l != i)
                .map(|l| {
                    let off = m[(l, i)].abs();
                    off / (m[(l, l)].abs() - (abs_row[l] - off))
                })
                .fold(0.0, f64::max)
        })
        .collect())
}

/// `max_{j≠i} |ã_ji| / |ã_ii|` per column of an inverse.
pub fn observed_offdiag_ratios(inv: &SymmetricMatrix<f64>) -> Vec<f64> {
    let n = inv.order();
    (0..n)
        .map(|i| (0..n).filter(|&j| j != i).map(|j| inv[(j, i)].abs() / inv[(i, i)].abs()).fold(0.0, f64::max))
        .collect()
}

/// `Q(C_k) + λI`.
pub fn cycle_block(k: usize, lambda: f64) -> SymmetricMatrix<f64> {
    signless_laplacian::<f64>(&Graph::cycle(k)).shifted(lambda)
}

/// `Q(P_k) + λI = Q(C_k) + λI − (e₁ + e_k)(e₁ + e_k)ᵀ`.
pub fn path_block(k: usize, lambda: f64) -> SymmetricMatrix<f64> {
    signless_laplacian::<f64>(&Graph::path(k)).shifted(lambda)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObservedInverse {
    pub trace: f64,
    pub max_diag: f64,
    pub min_diag: f64,
    pub max_offdiag_ratio: f64,
    /// `ã_1k`, the corner entry.
    pub corner: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InverseBoundReport {
    pub k: usize,
    pub lambda: f64,
    pub trace_lower: f64,
    pub trace_upper: f64,
    /// Bound on the common diagonal entry `d`.
    pub diag_bound: f64,
    /// Bound on `|ã_ij| / ã_ii`.
    pub offdiag_ratio: f64,
    pub observed: ObservedInverse,
}

impl InverseBoundReport {
    pub fn holds(&self) -> bool {
        let o = &self.observed;
        let eps = 1e-12 * (1.0 + o.trace);
        self.trace_lower <= o.trace + eps
            && o.trace <= self.trace_upper + eps
            && o.max_diag <= self.diag_bound + 1e-12
            && o.max_offdiag_ratio <= self.offdiag_ratio + 1e-12
    }
}

/// Closed-form bounds for `(Q(C_k) + λI)⁻¹` next to the observed inverse.
pub fn cycle_block_bounds(k: usize, lambda: f64) -> Result<InverseBoundReport, BoundsError> {
    if !(lambda > 0.0) {
        return Err(BoundsError::NonPositiveShift(lambda));
    }
    if k < 3 {
        return Err(BoundsError::ShortCycle(k));
    }
    let a = cycle_block(k, lambda);
    let inv = Cholesky::factor(&a)?.inverse();
    let (trace_lower, trace_upper) = bai_golub_trace_bounds(&a, lambda, lambda + 4.0)?;
    let diag: Vec<f64> = (0..k).map(|i| inv[(i, i)]).collect();
    let observed = ObservedInverse {
        trace: inv.trace(),
        max_diag: diag.iter().copied().fold(f64::MIN, f64::max),
        min_diag: diag.iter().copied().fold(f64::MAX, f64::min),
        max_offdiag_ratio: observed_offdiag_ratios(&inv).into_iter().fold(0.0, f64::max),
        corner: inv[(0, k - 1)],
    };
    Ok(InverseBoundReport {
        k,
        lambda,
        trace_lower,
        trace_upper,
        diag_bound: (lambda + 1.0) / (lambda * (lambda + 3.0)),
        offdiag_ratio: 1.0 / (lambda + 1.0),
        observed,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathRowsums {
    pub k: usize,
    pub lambda: f64,
    /// Common diagonal entry of the cycle-block inverse.
    pub d: f64,
    /// Corner entry `ã_1k` of the cycle-block inverse.
    pub corner: f64,
    pub beta: f64,
    pub sherman_morrison: Vec<f64>,
    pub direct: Vec<f64>,
    pub max_discrepancy: f64,
}

impl PathRowsums {
    pub fn min_rowsum(&self) -> f64 {
        self.direct.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Row sums of `(Q(P_k) + (s − μ)I)⁻¹` through the rank-one update of the
/// cycle block, alongside those of the directly computed inverse.
pub fn path_block_rowsums(k: usize, s: usize, mu: f64) -> Result<PathRowsums, BoundsError> {
    let lambda = s as f64 - mu;
    if !(lambda > 0.0) {
        return Err(BoundsError::NonPositiveShift(lambda));
    }
    if k < 3 {
        return Err(BoundsError::ShortCycle(k));
    }
    let at = Cholesky::factor(&cycle_block(k, lambda))?.inverse();
    let d = at[(0, 0)];
    let corner = at[(0, k - 1)];
    let beta = 1.0 / (4.0 + lambda);
    let denom = 1.0 - 2.0 * (d + corner);
    if denom.abs() < 1e-12 {
        return Err(BoundsError::SingularUpdate);
    }
    let sherman_morrison: Vec<f64> = (0..k).map(|i| beta * (1.0 + 2.0 * (at[(i, 0)] + at[(i, k - 1)]) / denom)).collect();
    let direct = Cholesky::factor(&path_block(k, lambda))?.inverse().row_sums();
    let max_discrepancy = sherman_morrison.iter().zip(&direct).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(PathRowsums { k, lambda, d, corner, beta, sherman_morrison, direct, max_discrepancy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_trace_bounds_are_tight() {
        let (lo, hi) = bai_golub_trace_bounds(&SymmetricMatrix::identity(5), 1.0, 1.0).unwrap();
        assert!((lo - 5.0).abs() < 1e-12 && (hi - 5.0).abs() < 1e-12);
    }

    #[test]
    fn two_point_spectrum() {
        let m = SymmetricMatrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, 2.0]]).unwrap();
        let (lo, hi) = bai_golub_trace_bounds(&m, 1.0, 2.0).unwrap();
        assert!(lo <= 1.5 + 1e-12 && 1.5 <= hi + 1e-12);
        assert!(matches!(bai_golub_trace_bounds(&m, 1.5, 2.0), Err(BoundsError::BracketViolated { .. })));
        assert!(matches!(bai_golub_trace_bounds(&m, 0.0, 2.0), Err(BoundsError::BadBracket { .. })));
    }

    #[test]
    fn hexagon_bracket() {
        let a = cycle_block(6, 3.0);
        let exact: f64 = (0..6).map(|j| 1.0 / (5.0 + 2.0 * (std::f64::consts::TAU * j as f64 / 6.0).cos())).sum();
        let (lo, hi) = bai_golub_trace_bounds(&a, 3.0, 7.0).unwrap();
        assert!(lo <= exact && exact <= hi, "{lo} {exact} {hi}");
    }

    #[test]
    fn diagonal_dominance_ratios() {
        let r = diag_dominance_inverse_bound(&cycle_block(5, 4.0)).unwrap();
        assert!(r.iter().all(|&v| (v - 0.2).abs() < 1e-15));
        let diag = SymmetricMatrix::from_rows(vec![vec![2.0, 0.0], vec![0.0, 3.0]]).unwrap();
        assert_eq!(diag_dominance_inverse_bound(&diag).unwrap(), vec![0.0, 0.0]);
        let weak = SymmetricMatrix::from_rows(vec![vec![1.0, 1.0], vec![1.0, 3.0]]).unwrap();
        assert_eq!(diag_dominance_inverse_bound(&weak), Err(BoundsError::NotDiagonallyDominant(0)));
        for k in [3, 7, 12] {
            let a = cycle_block(k, 2.1);
            let bound = diag_dominance_inverse_bound(&a).unwrap();
            assert!(bound.iter().all(|&v| v < 0.33));
            let obs = observed_offdiag_ratios(&Cholesky::factor(&a).unwrap().inverse());
            for (o, b) in obs.iter().zip(&bound) {
                assert!(o <= b);
            }
        }
    }

    #[test]
    fn cycle_block_examples() {
        let r = cycle_block_bounds(3, 1.0).unwrap();
        assert_eq!(r.diag_bound, 0.5);
        assert!(r.holds());
        let r = cycle_block_bounds(9, 100.0).unwrap();
        assert!((r.observed.max_diag - 1.0 / 102.0).abs() < 1e-3);
        assert!(r.holds());
        for lambda in [2.01, 2.5, 5.0] {
            for k in 3..30 {
                let r = cycle_block_bounds(k, lambda).unwrap();
                assert!(r.observed.max_diag < 0.3);
                assert!(r.observed.max_diag * r.observed.max_offdiag_ratio < 0.1);
            }
        }
        assert_eq!(cycle_block_bounds(5, 0.0), Err(BoundsError::NonPositiveShift(0.0)));
        assert_eq!(cycle_block_bounds(2, 1.0), Err(BoundsError::ShortCycle(2)));
    }

    #[test]
    fn corner_entry_is_negative() {
        for k in 3..=20 {
            for lambda in [2.1, 3.0, 5.0] {
                assert!(cycle_block_bounds(k, lambda).unwrap().observed.corner < 0.0, "k={k} λ={lambda}");
            }
        }
    }

    #[test]
    fn path_rowsums_positive_for_six() {
        for k in 3..=60 {
            for mu in [0.0, 1.0, 2.5, 3.99] {
                let p = path_block_rowsums(k, 6, mu).unwrap();
                assert!(p.max_discrepancy < 1e-10);
                assert!(p.min_rowsum() > 0.0);
            }
        }
    }

    proptest! {
        #[test]
        fn circulant_inverse_has_constant_diagonal(k in 3usize..60, lambda in 0.01f64..50.0) {
            let r = cycle_block_bounds(k, lambda).unwrap();
            prop_assert!(r.observed.max_diag - r.observed.min_diag < 1e-12);
            prop_assert!(r.holds());
        }
    }
}
