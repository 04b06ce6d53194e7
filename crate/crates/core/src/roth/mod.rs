//! The S-Roth oracle and the matrix certificates around it.
//!
//! [`s_roth_oracle`] is the ground truth: it looks at the smallest
//! eigenvector of `Q(H)` directly. Everything else in this module is a
//! certificate that either implies the property ([`harmcond_check`],
//! [`gdeg_check`], ...) or characterizes it through a smaller matrix
//! ([`build_q_mu`], [`build_r_mu`]).

mod certificates;
mod reduced;
mod schur;

pub use certificates::{
    alpha_of, bdeg_check, deg2_predicate, gavrilov_check, gc_check, gdeg_check, harmcond_check, st_check,
    steve_characterization, GdegCase, HarmcondResult, HarmcondWitness, SteveResult,
};
pub use reduced::{build_r_mu, r_mu_rowsum_check, ReducedMatrix, RowsumReport};
pub use schur::{build_q_mu, classify_q_mu, MatrixClassReport, SchurMatrix};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::CompositeInstance;
use crate::linalg::exact::{exact_kernel_dim, Rational};
use crate::linalg::LinalgError;
use crate::spectra::{composite_eigenpair, signless_laplacian_int};
use crate::tol;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RothError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("mu = {mu} is not below the smallest S-degree {min_d2}")]
    MuTooLarge { mu: f64, min_d2: usize },
    #[error("operation requires a complete scaffold")]
    NotCompleteScaffold,
    #[error("mu = {mu} is not below t = {t}")]
    MuAtLeastT { mu: f64, t: usize },
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("order {order} outside [2, {n})")]
    BadOrder { order: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictReason {
    /// Simple eigenvalue, S-entries positive and T-entries negative.
    SignedEigenvector,
    /// Simple eigenvalue with a (numerically or exactly) zero entry.
    ZeroEntry,
    /// Simple eigenvalue, nonzero entries, but the sign pattern is not (S+, T−).
    MixedSigns,
    /// The smallest eigenvalue is repeated.
    MultipleEigenvalue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RothVerdict {
    pub is_s_roth: bool,
    pub reason: VerdictReason,
    pub mu: f64,
    pub multiplicity: usize,
    /// Unit eigenvector, T-first, S-entries summing to a nonnegative value.
    pub eigenvector: Vec<f64>,
    /// Whether `mu` was confirmed as an integer eigenvalue by exact elimination.
    pub exact: bool,
}

impl RothVerdict {
    pub fn w(&self, t: usize) -> &[f64] {
        &self.eigenvector[..t]
    }

    pub fn z(&self, t: usize) -> &[f64] {
        &self.eigenvector[t..]
    }
}

fn classify_signs(signs: &[i8], t: usize) -> VerdictReason {
    if signs.contains(&0) {
        VerdictReason::ZeroEntry
    } else if signs[..t].iter().all(|&v| v < 0) && signs[t..].iter().all(|&v| v > 0) {
        VerdictReason::SignedEigenvector
    } else {
        VerdictReason::MixedSigns
    }
}

fn verdict(reason: VerdictReason, mu: f64, multiplicity: usize, eigenvector: Vec<f64>, exact: bool) -> RothVerdict {
    RothVerdict { is_s_roth: reason == VerdictReason::SignedEigenvector, reason, mu, multiplicity, eigenvector, exact }
}

/// Exact kernel of `Q(H) − cI` when it is nontrivial.
fn exact_snap(inst: &CompositeInstance, c: i64) -> Option<RothVerdict> {
    let ker = exact_kernel_dim(&signless_laplacian_int(inst.h()), c);
    match ker.nullity {
        0 => None,
        1 => {
            let t = inst.t();
            let mut x: Vec<Rational> = ker.basis[0].clone();
            let s_sum: Rational = x[t..].iter().fold(Rational::zero(), |a, v| a + v);
            if s_sum.is_negative() {
                x.iter_mut().for_each(|v| *v = -v.clone());
            }
            let signs: Vec<i8> = x.iter().map(|v| if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 }).collect();
            let mut xf: Vec<f64> = x.iter().map(crate::linalg::exact::rational_to_f64).collect();
            let norm = xf.iter().map(|v| v * v).sum::<f64>().sqrt();
            xf.iter_mut().for_each(|v| *v /= norm);
            Some(verdict(classify_signs(&signs, t), c as f64, 1, xf, true))
        }
        k => {
            let mut xf = ker.basis_f64().swap_remove(0);
            let norm = xf.iter().map(|v| v * v).sum::<f64>().sqrt();
            xf.iter_mut().for_each(|v| *v /= norm);
            Some(verdict(VerdictReason::MultipleEigenvalue, c as f64, k, xf, true))
        }
    }
}

/// Decides S-Rothness from the smallest eigenpair of `Q(H)`.
///
/// When `μ` lies within [`tol::INTEGER_SNAP`] of an integer the kernel of
/// `Q(H) − μI` is recomputed over the rationals, so exact zeros and exact
/// repeated eigenvalues are not left to rounding.
pub fn s_roth_oracle(inst: &CompositeInstance) -> Result<RothVerdict, RothError> {
    let p = composite_eigenpair::<f64>(inst)?;
    let c = p.mu.round();
    if (p.mu - c).abs() < tol::INTEGER_SNAP {
        if let Some(v) = exact_snap(inst, c as i64) {
            return Ok(v);
        }
    }
    if p.multiplicity > 1 {
        return Ok(verdict(VerdictReason::MultipleEigenvalue, p.mu, p.multiplicity, p.vector, false));
    }
    let eps = tol::sign_tol(&p.vector);
    let signs: Vec<i8> = p
        .vector
        .iter()
        .map(|&v| if v.abs() <= eps { 0 } else if v > 0.0 { 1 } else { -1 })
        .collect();
    Ok(verdict(classify_signs(&signs, inst.t()), p.mu, 1, p.vector, false))
}
