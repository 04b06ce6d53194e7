use serde::{Deserialize, Serialize};

use super::CensusError;
use crate::graph::{emit_graph6, Biadjacency, CompositeInstance, Graph};
use crate::roth::{
    bdeg_check, build_q_mu, build_r_mu, classify_q_mu, gc_check, harmcond_check, r_mu_rowsum_check, s_roth_oracle,
    st_check, VerdictReason,
};

/// Flat per-instance classification, one CSV or JSON row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    /// graph6 of H, T-first.
    pub graph6: String,
    /// graph6 of the scaffold B alone, T-first.
    pub scaffold: String,
    pub s: usize,
    pub t: usize,
    pub mu: f64,
    pub multiplicity: usize,
    pub s_roth: bool,
    pub reason: VerdictReason,
    pub harmcond: bool,
    pub gc: bool,
    pub bdeg: bool,
    pub st: bool,
    pub z: bool,
    pub m_matrix: bool,
    /// Off-diagonal pattern of `Q_μ` connected.
    pub irreducible: bool,
    pub inv_positive: bool,
    pub near_zero_inverse: bool,
    pub minpositive: bool,
    /// Row-sum criterion on `R_μ⁻¹`; empty unless the scaffold is complete
    /// and `R_μ` positive definite.
    pub rmu_rowsums: Option<bool>,
    pub s_maximal: bool,
}

impl ClassificationRecord {
    /// The M-matrix column of the census table: Z-pattern, positive
    /// definite and irreducible.
    pub fn counts_as_m_matrix(&self) -> bool {
        self.m_matrix && self.irreducible
    }
}

/// Classifies `H = B + G`. Bipartite `H` (edgeless `G`) is rejected since
/// `μ = 0` leaves `Q_μ` singular.
pub fn classify_instance(b: &Biadjacency, g: &Graph) -> Result<ClassificationRecord, CensusError> {
    let inst = CompositeInstance::compose(b.s(), g, Some(b))?;
    classify_composite(&inst)
}

pub fn classify_composite(inst: &CompositeInstance) -> Result<ClassificationRecord, CensusError> {
    if inst.g_is_edgeless() {
        return Err(CensusError::Bipartite);
    }
    let t = inst.t();
    let v = s_roth_oracle(inst)?;
    let sm = build_q_mu(inst, v.mu)?;
    let mut cls = classify_q_mu(&sm)?;
    if v.exact {
        // exact kernel: Q_μ's eigenvector for μ is w itself
        let w = v.w(t);
        cls.minpositive = v.multiplicity == 1 && (w.iter().all(|&x| x > 0.0) || w.iter().all(|&x| x < 0.0));
    }
    let rmu_rowsums = if inst.is_complete_scaffold() {
        let rm = build_r_mu(inst, v.mu)?;
        if rm.positive_definite {
            Some(r_mu_rowsum_check(&rm, None)?.s_roth)
        } else {
            None
        }
    } else {
        None
    };
    Ok(ClassificationRecord {
        graph6: emit_graph6(inst.h()),
        scaffold: emit_graph6(inst.b()),
        s: inst.s(),
        t,
        mu: v.mu,
        multiplicity: v.multiplicity,
        s_roth: v.is_s_roth,
        reason: v.reason,
        harmcond: harmcond_check(inst).holds,
        gc: gc_check(inst),
        bdeg: bdeg_check(inst),
        st: st_check(inst),
        z: cls.z_matrix,
        m_matrix: cls.m_matrix,
        irreducible: cls.irreducible,
        inv_positive: cls.inverse_positive,
        near_zero_inverse: cls.near_zero_inverse_entry,
        minpositive: cls.minpositive,
        rmu_rowsums,
        s_maximal: inst.s_maximal(),
    })
}
