//! Per-instance analysis report and the noise-recovery experiment.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{apply_noise, CompositeInstance, Graph, InstanceError, NoiseOp};
use crate::roth::{
    alpha_of, bdeg_check, build_q_mu, build_r_mu, classify_q_mu, deg2_predicate, gc_check, gdeg_check,
    harmcond_check, r_mu_rowsum_check, s_roth_oracle, st_check, steve_characterization, GdegCase, HarmcondWitness,
    MatrixClassReport, RothError, SteveResult, VerdictReason,
};
use crate::spectra::{mu_lower_bound_degrees, mu_upper_bound_cut};

/// Slack allowed when checking that the bounds bracket `μ`.
const BRACKET_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub intra_edges: usize,
    pub cross_edges: usize,
    pub complete_scaffold: bool,
    pub s_maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmcondReport {
    pub holds: bool,
    /// Failing pair of T-vertices (local indices), if any.
    pub pair: Option<(usize, usize)>,
    /// Harmonic sum at the failing pair as an exact fraction; absent for
    /// non-adjacent pairs without common neighbours.
    pub sum: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificates {
    pub harmcond: HarmcondReport,
    pub gc: bool,
    pub bdeg: bool,
    pub st: bool,
    pub gdeg: GdegCase,
    pub steve: SteveResult,
    pub deg2: bool,
    /// Classification of `Q_μ`, absent when it cannot be formed.
    pub q_mu: Option<MatrixClassReport>,
    /// Row-sum criterion on `R_μ⁻¹` (complete scaffold, `R_μ` positive definite).
    pub rmu_rowsums: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    /// `2δ(H) − λ_max(L(H))`.
    pub lower: f64,
    /// `4e/(s + t)`.
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub instance: InstanceSummary,
    pub mu: f64,
    pub multiplicity: usize,
    /// Unit eigenvector, T-first.
    pub eigenvector: Vec<f64>,
    pub s_roth: bool,
    pub reason: VerdictReason,
    pub exact: bool,
    pub certificates: Certificates,
    pub bounds: Bounds,
    /// `s/(t − μ)` for complete scaffolds with `μ < t`.
    pub alpha: Option<f64>,
}

impl AnalysisReport {
    /// Every sufficient certificate agrees with the verdict, an applicable
    /// characterization matches it, and the bounds bracket `μ`.
    pub fn is_consistent(&self) -> bool {
        let c = &self.certificates;
        let sufficient = [
            c.harmcond.holds,
            c.gc,
            c.bdeg,
            c.st,
            c.gdeg.certifies(),
            c.deg2,
            c.q_mu.as_ref().is_some_and(|q| q.m_matrix && q.irreducible),
        ];
        let one_sided = sufficient.iter().all(|&p| !p || self.s_roth);
        let steve = c.steve.s_roth.is_none_or(|r| r == self.s_roth);
        let minpos = c.q_mu.as_ref().is_none_or(|q| q.minpositive == self.s_roth);
        let rowsums = c.rmu_rowsums.is_none_or(|r| r == self.s_roth);
        let bracket = self.bounds.lower <= self.mu + BRACKET_SLACK && self.mu <= self.bounds.upper + BRACKET_SLACK;
        one_sided && steve && minpos && rowsums && bracket
    }
}

fn harmcond_report(inst: &CompositeInstance) -> HarmcondReport {
    let r = harmcond_check(inst);
    let (pair, sum) = match r.witness {
        Some(HarmcondWitness::LowSum { i, j, sum }) => (Some((i, j)), Some(sum.to_string())),
        Some(HarmcondWitness::EmptyCommon { i, j }) => (Some((i, j)), None),
        None => (None, None),
    };
    HarmcondReport { holds: r.holds, pair, sum }
}

/// Runs the oracle and every certificate on one instance.
pub fn analyze(inst: &CompositeInstance) -> Result<AnalysisReport, RothError> {
    let v = s_roth_oracle(inst)?;
    let t = inst.t();
    let q_mu = match build_q_mu(inst, v.mu) {
        Ok(sm) => {
            let mut cls = classify_q_mu(&sm)?;
            if v.exact {
                let w = v.w(t);
                cls.minpositive = v.multiplicity == 1 && (w.iter().all(|&x| x > 0.0) || w.iter().all(|&x| x < 0.0));
            }
            Some(cls)
        }
        Err(RothError::MuTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
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
    let certificates = Certificates {
        harmcond: harmcond_report(inst),
        gc: gc_check(inst),
        bdeg: bdeg_check(inst),
        st: st_check(inst),
        gdeg: gdeg_check(inst),
        steve: steve_characterization(inst),
        deg2: deg2_predicate(inst),
        q_mu,
        rmu_rowsums,
    };
    let bounds = Bounds { lower: mu_lower_bound_degrees::<f64>(inst.h())?, upper: mu_upper_bound_cut(inst) };
    let alpha = alpha_of(inst, v.mu).ok();
    let instance = InstanceSummary {
        n: inst.n(),
        s: inst.s(),
        t,
        intra_edges: inst.g().edge_count(),
        cross_edges: inst.d1().iter().sum(),
        complete_scaffold: inst.is_complete_scaffold(),
        s_maximal: inst.s_maximal(),
    };
    Ok(AnalysisReport {
        instance,
        mu: v.mu,
        multiplicity: v.multiplicity,
        eigenvector: v.eigenvector,
        s_roth: v.is_s_roth,
        reason: v.reason,
        exact: v.exact,
        certificates,
        bounds,
        alpha,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoiseConfig {
    pub s: usize,
    pub t: usize,
    pub deletions: usize,
    pub additions: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseTrial {
    pub trial: usize,
    pub recovered: bool,
    pub reason: VerdictReason,
    pub mu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseReport {
    pub config: NoiseConfig,
    pub recovered: usize,
    pub rate: f64,
    pub trials: Vec<NoiseTrial>,
}

#[derive(Debug, thiserror::Error)]
pub enum NoiseError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Roth(#[from] RothError),
}

/// Starts each trial from `K_{s,t}`, applies the random cross deletions and
/// intra-T additions, and records whether the oracle still finds the planted
/// sign pattern. Trial `i` draws from its own ChaCha8 stream.
pub fn noise_recovery(cfg: &NoiseConfig) -> Result<NoiseReport, NoiseError> {
    let NoiseConfig { s, t, deletions, additions, trials, seed } = *cfg;
    if s == 0 || t == 0 {
        return Err(NoiseError::Infeasible("parts must be nonempty".into()));
    }
    if additions > t * (t - 1) / 2 {
        return Err(NoiseError::Infeasible(format!("{additions} additions exceed the {} pairs in T", t * (t - 1) / 2)));
    }
    // every vertex keeps a cross edge and the scaffold stays connected
    if deletions > s * t - (s + t - 1) {
        return Err(NoiseError::Infeasible(format!("{deletions} deletions would disconnect K_{{{s},{t}}}")));
    }
    let base = CompositeInstance::compose(s, &Graph::empty(t), None)?;
    let mut ops = vec![NoiseOp::RandomDeleteCross; deletions];
    ops.extend(std::iter::repeat_n(NoiseOp::RandomAddIntra, additions));
    let mut out = Vec::with_capacity(trials);
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let inst = apply_noise(&base, &ops, rng.next_u64())?;
        let v = s_roth_oracle(&inst)?;
        out.push(NoiseTrial { trial, recovered: v.is_s_roth, reason: v.reason, mu: v.mu });
    }
    let recovered = out.iter().filter(|r| r.recovered).count();
    let rate = if trials == 0 { 1.0 } else { recovered as f64 / trials as f64 };
    Ok(NoiseReport { config: *cfg, recovered, rate, trials: out })
}
