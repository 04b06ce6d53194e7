use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{bai_golub_trace_bounds, cycle_block_bounds, path_block_rowsums, BoundsError};
use crate::graph::{CompositeInstance, Graph};
use crate::linalg::{full_spectrum, Cholesky, SymmetricMatrix};
use crate::spectra::composite_eigenpair;

/// One CSV row of a bound sweep. `holds` compares `observed` against `bound`
/// in the direction appropriate to `quantity`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub sweep: String,
    pub quantity: String,
    pub k: usize,
    pub lambda: f64,
    pub bound: f64,
    pub observed: f64,
    pub holds: bool,
}

fn row(sweep: &str, quantity: &str, k: usize, lambda: f64, bound: f64, observed: f64, holds: bool) -> BoundRow {
    BoundRow { sweep: sweep.into(), quantity: quantity.into(), k, lambda, bound, observed, holds }
}

/// Diagonal, off-diagonal ratio and trace bounds for every `(k, λ)`.
pub fn cycle_sweep(ks: &[usize], lambdas: &[f64]) -> Result<Vec<BoundRow>, BoundsError> {
    let pairs: Vec<(usize, f64)> = ks.iter().flat_map(|&k| lambdas.iter().map(move |&l| (k, l))).collect();
    let reports = pairs.par_iter().map(|&(k, l)| cycle_block_bounds(k, l)).collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::with_capacity(4 * reports.len());
    for r in reports {
        let o = &r.observed;
        let eps = 1e-12 * (1.0 + o.trace);
        rows.push(row("cycle", "diag", r.k, r.lambda, r.diag_bound, o.max_diag, o.max_diag <= r.diag_bound + 1e-12));
        rows.push(row(
            "cycle",
            "offdiag_ratio",
            r.k,
            r.lambda,
            r.offdiag_ratio,
            o.max_offdiag_ratio,
            o.max_offdiag_ratio <= r.offdiag_ratio + 1e-12,
        ));
        rows.push(row("cycle", "trace_lower", r.k, r.lambda, r.trace_lower, o.trace, r.trace_lower <= o.trace + eps));
        rows.push(row("cycle", "trace_upper", r.k, r.lambda, r.trace_upper, o.trace, o.trace <= r.trace_upper + eps));
    }
    Ok(rows)
}

/// For each `k`, takes `μ = μ(K̄_s ∨ P_k)` and reports the smallest row sum
/// of the path-block inverse and the Sherman–Morrison discrepancy.
pub fn path_sweep(s: usize, ks: &[usize]) -> Result<Vec<BoundRow>, BoundsError> {
    let out = ks
        .par_iter()
        .map(|&k| {
            let inst = CompositeInstance::compose(s, &Graph::path(k), None).expect("join with a path is connected");
            let mu = composite_eigenpair::<f64>(&inst)?.mu;
            let p = path_block_rowsums(k, s, mu)?;
            Ok(vec![
                row("path", "min_rowsum", k, p.lambda, 0.0, p.min_rowsum(), p.min_rowsum() > 0.0),
                row("path", "sm_discrepancy", k, p.lambda, 1e-10, p.max_discrepancy, p.max_discrepancy <= 1e-10),
            ])
        })
        .collect::<Result<Vec<_>, BoundsError>>()?;
    Ok(out.into_iter().flatten().collect())
}

/// Random PD matrix `MᵀM/n + cI` with a bracket loosened around its spectrum.
fn random_pd(rng: &mut ChaCha8Rng, n: usize) -> SymmetricMatrix<f64> {
    let m: Vec<Vec<f64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
    let c = rng.gen_range(0.05..2.0);
    SymmetricMatrix::from_upper(n, |i, j| {
        let dot: f64 = (0..n).map(|r| m[r][i] * m[r][j]).sum();
        dot / n as f64 + if i == j { c } else { 0.0 }
    })
}

/// Bai–Golub bracket on `count` random PD matrices of order `2..=n_max`;
/// `k` holds the order and `lambda` the lower bracket end.
pub fn baigolub_sweep(count: usize, n_max: usize, seed: u64) -> Result<Vec<BoundRow>, BoundsError> {
    let out = (0..count)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let n = rng.gen_range(2..=n_max.max(2));
            let a = random_pd(&mut rng, n);
            let es = full_spectrum(&a)?;
            let lo = es.smallest() * rng.gen_range(0.5..1.0);
            let hi = es.largest() * rng.gen_range(1.0..1.5);
            let (lower, upper) = bai_golub_trace_bounds(&a, lo, hi)?;
            let trace = Cholesky::factor(&a)?.inverse().trace();
            let eps = 1e-9 * (1.0 + trace);
            Ok(vec![
                row("baigolub", "trace_lower", n, lo, lower, trace, lower <= trace + eps),
                row("baigolub", "trace_upper", n, lo, upper, trace, trace <= upper + eps),
            ])
        })
        .collect::<Result<Vec<_>, BoundsError>>()?;
    Ok(out.into_iter().flatten().collect())
}
