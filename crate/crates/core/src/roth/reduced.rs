use serde::{Deserialize, Serialize};

use super::RothError;
use crate::graph::CompositeInstance;
use crate::linalg::{Cholesky, SymmetricMatrix};
use crate::spectra::signless_laplacian;
use crate::tol;

/// `R_μ = Q(G) + (s − μ)I` for a complete scaffold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedMatrix {
    pub r_mu: SymmetricMatrix<f64>,
    pub mu: f64,
    pub s: usize,
    pub t: usize,
    pub positive_definite: bool,
    /// `1ᵀ R_μ⁻¹ 1` when positive definite.
    pub gamma: Option<f64>,
    /// `(4 + s − μ)⁻¹`, the common row sum of the inverse of a cycle block.
    pub beta: f64,
    #[serde(skip)]
    inverse: Option<SymmetricMatrix<f64>>,
}

impl ReducedMatrix {
    pub fn inverse(&self) -> Option<&SymmetricMatrix<f64>> {
        self.inverse.as_ref()
    }
}

pub fn build_r_mu(inst: &CompositeInstance, mu: f64) -> Result<ReducedMatrix, RothError> {
    if !inst.is_complete_scaffold() {
        return Err(RothError::NotCompleteScaffold);
    }
    let s = inst.s();
    let r_mu = signless_laplacian::<f64>(inst.g()).shifted(s as f64 - mu);
    let inverse = Cholesky::factor(&r_mu).ok().map(|c| c.inverse());
    let gamma = inverse.as_ref().map(|inv| inv.row_sums().iter().sum());
    Ok(ReducedMatrix {
        r_mu,
        mu,
        s,
        t: inst.t(),
        positive_definite: inverse.is_some(),
        gamma,
        beta: 1.0 / (4.0 + s as f64 - mu),
        inverse,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowsumReport {
    /// All row sums of `R_μ⁻¹` positive.
    pub s_roth: bool,
    pub rowsums: Vec<f64>,
    /// When `z` is supplied: `max_k |z_k − γσ_z/(t − μ)|`.
    pub z_consistency: Option<f64>,
    /// When `z` is supplied: `w = −R_μ⁻¹Jz`.
    pub w: Option<Vec<f64>>,
}

/// Row-sum criterion on `R_μ⁻¹`; given the S-part `z` of the eigenvector it
/// also reconstructs `w` and checks that `z` is the constant vector
/// `γσ_z/(t − μ)·1`.
pub fn r_mu_rowsum_check(rm: &ReducedMatrix, z: Option<&[f64]>) -> Result<RowsumReport, RothError> {
    let inv = rm.inverse.as_ref().ok_or(RothError::NotPositiveDefinite)?;
    let rowsums = inv.row_sums();
    // w is a multiple of the row sums: same zero threshold as the oracle
    let eps = tol::sign_tol(&rowsums);
    let s_roth = rowsums.iter().all(|&r| r > eps);
    let (z_consistency, w) = match z {
        Some(z) => {
            let sigma: f64 = z.iter().sum();
            let gamma = rm.gamma.expect("gamma present when positive definite");
            let target = gamma * sigma / (rm.t as f64 - rm.mu);
            let dev = z.iter().map(|&v| (v - target).abs()).fold(0.0, f64::max);
            let w = rowsums.iter().map(|&r| -r * sigma).collect();
            (Some(dev), Some(w))
        }
        None => (None, None),
    };
    Ok(RowsumReport { s_roth, rowsums, z_consistency, w })
}
