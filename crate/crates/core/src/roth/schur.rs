use serde::{Deserialize, Serialize};

use super::RothError;
use crate::graph::{CompositeInstance, Graph};
use crate::linalg::{Cholesky, LinalgError, SymmetricMatrix};
use crate::spectra::smallest_eigenpair;
use crate::tol;

/// `Q_μ = Q(G) + D₁ + K(μI − D₂)⁻¹Kᵀ`, the Schur complement of the S-block of
/// `Q(H) − μI` shifted back by `μ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchurMatrix {
    pub q_mu: SymmetricMatrix<f64>,
    pub mu: f64,
    /// `s / (t − μ)` for a complete scaffold.
    pub alpha: Option<f64>,
}

pub fn build_q_mu(inst: &CompositeInstance, mu: f64) -> Result<SchurMatrix, RothError> {
    let min_d2 = *inst.d2().iter().min().expect("instances have s ≥ 1");
    if mu >= min_d2 as f64 {
        return Err(RothError::MuTooLarge { mu, min_d2 });
    }
    let (g, k, d1, d2) = (inst.g(), inst.k(), inst.d1(), inst.d2());
    let inv: Vec<f64> = d2.iter().map(|&d| 1.0 / (mu - d as f64)).collect();
    let q_mu = SymmetricMatrix::from_upper(inst.t(), |i, j| {
        let mut v: f64 = (0..inst.s()).filter(|&c| k.get(i, c) && k.get(j, c)).map(|c| inv[c]).sum();
        if i == j {
            v += (g.degree(i) + d1[i]) as f64;
        } else if g.has_edge(i, j) {
            v += 1.0;
        }
        v
    });
    let alpha = inst.is_complete_scaffold().then(|| inst.s() as f64 / (inst.t() as f64 - mu));
    Ok(SchurMatrix { q_mu, mu, alpha })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixClassReport {
    /// Off-diagonal entries all `≤` [`tol::Z_TOL`].
    pub z_matrix: bool,
    pub positive_definite: bool,
    /// Z-matrix and positive definite.
    pub m_matrix: bool,
    /// The pattern of nonzero off-diagonal entries is connected.
    pub irreducible: bool,
    /// Every inverse entry exceeds [`tol::INV_POS_TOL`] relative to the largest.
    pub inverse_positive: bool,
    /// Smallest inverse entry, absent when singular.
    pub min_inverse_entry: Option<f64>,
    /// Some inverse entry lies within the positivity tolerance of zero.
    pub near_zero_inverse_entry: bool,
    /// λ₁ simple with a strictly one-signed eigenvector.
    pub minpositive: bool,
    /// Row sums of `R_μ⁻¹` all positive; filled only by callers that build `R_μ`.
    pub rowsums_positive: Option<bool>,
}

fn offdiagonal_pattern(m: &SymmetricMatrix<f64>) -> Graph {
    let n = m.order();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if m[(i, j)].abs() > tol::Z_TOL {
                g.add_edge(i, j).expect("indices in range");
            }
        }
    }
    g
}

/// Z / M / inverse-positive / minpositive classification of `Q_μ`.
pub fn classify_q_mu(sm: &SchurMatrix) -> Result<MatrixClassReport, RothError> {
    let m = &sm.q_mu;
    let z_matrix = m.max_offdiagonal() <= tol::Z_TOL;
    let chol = Cholesky::factor(m);
    let positive_definite = chol.is_ok();
    let inverse = match chol {
        Ok(c) => Some(c.inverse()),
        Err(_) => match m.inverse() {
            Ok(inv) => Some(inv),
            Err(LinalgError::Singular) => None,
            Err(e) => return Err(e.into()),
        },
    };
    let (inverse_positive, min_inverse_entry, near_zero) = match &inverse {
        Some(inv) => {
            let scale = inv.as_matrix().max_abs();
            let min = inv.as_matrix().min_entry();
            let cut = tol::INV_POS_TOL * scale;
            (min > cut, Some(min), inv.as_matrix().entries().any(|v| v.abs() <= cut))
        }
        None => (false, None, false),
    };
    let p = smallest_eigenpair(m)?;
    let eps = tol::sign_tol(&p.vector);
    let minpositive = p.multiplicity == 1 && p.vector.iter().all(|&v| v > eps);
    Ok(MatrixClassReport {
        z_matrix,
        positive_definite,
        m_matrix: z_matrix && positive_definite,
        irreducible: offdiagonal_pattern(m).is_connected(),
        inverse_positive,
        min_inverse_entry,
        near_zero_inverse_entry: near_zero,
        minpositive,
        rowsums_positive: None,
    })
}
