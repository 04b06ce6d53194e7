use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{all_graphs, all_trees, random_graph, random_tree};
use super::CensusError;
use crate::graph::{emit_graph6, Biadjacency, CompositeInstance, Graph};
use crate::roth::{s_roth_oracle, VerdictReason};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjectureKind {
    /// G a tree with `Δ(G) ≤ s`.
    Tree,
    /// `Δ(G) < s`.
    MaxDeg,
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Also run pairs outside `t > s ≥ 6`.
    pub relaxed: bool,
    /// Largest `t` for which the family is generated exhaustively.
    pub exhaustive_max_t: usize,
    /// Random members per `(s, t)` beyond the exhaustive range; `P_t` is always added.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { relaxed: false, exhaustive_max_t: 9, samples: 200, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub s: usize,
    pub t: usize,
    /// graph6 of G.
    pub g: String,
    pub reason: VerdictReason,
    pub mu: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub kind: ConjectureKind,
    pub checked: usize,
    /// `(s, t)` pairs skipped for not meeting `t > s ≥ 6`.
    pub skipped: Vec<(usize, usize)>,
    pub counterexamples: Vec<Counterexample>,
}

fn family(kind: ConjectureKind, s: usize, t: usize, opts: &SweepOptions) -> Vec<Graph> {
    let cap = match kind {
        ConjectureKind::Tree => s,
        ConjectureKind::MaxDeg => s.saturating_sub(1),
    };
    if t <= opts.exhaustive_max_t {
        return match kind {
            ConjectureKind::Tree => all_trees(t, Some(cap)),
            ConjectureKind::MaxDeg => all_graphs(t, Some(cap)),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(((s as u64) << 32) | t as u64);
    let mut out = vec![Graph::path(t)];
    while out.len() < opts.samples + 1 {
        let g = match kind {
            ConjectureKind::Tree => random_tree(&mut rng, t),
            ConjectureKind::MaxDeg => random_graph(&mut rng, t, 0.5, Some(cap)),
        };
        if g.max_degree() <= cap {
            out.push(g);
        }
    }
    out
}

/// Runs the oracle on `K̄_s ∨ G` over the conjectured family for every
/// `(s, t)` in range and lists the instances that are not S-Roth.
pub fn conjecture_sweep(
    kind: ConjectureKind,
    s_range: impl IntoIterator<Item = usize>,
    t_range: impl IntoIterator<Item = usize> + Clone,
    opts: &SweepOptions,
) -> Result<SweepReport, CensusError> {
    let mut report = SweepReport { kind, checked: 0, skipped: vec![], counterexamples: vec![] };
    for s in s_range {
        for t in t_range.clone() {
            if t == 0 || s == 0 {
                continue;
            }
            if !opts.relaxed && !(t > s && s >= 6) {
                report.skipped.push((s, t));
                continue;
            }
            let fam = family(kind, s, t, opts);
            let found: Vec<Option<Counterexample>> = fam
                .par_iter()
                .map(|g| {
                    let inst = CompositeInstance::compose(s, g, None)?;
                    let v = s_roth_oracle(&inst)?;
                    Ok((!v.is_s_roth).then(|| Counterexample { s, t, g: emit_graph6(g), reason: v.reason, mu: v.mu }))
                })
                .collect::<Result<_, CensusError>>()?;
            report.checked += fam.len();
            report.counterexamples.extend(found.into_iter().flatten());
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UltraRothReport {
    pub all_s_roth: bool,
    pub checked: usize,
    /// graph6 of each failing G with the oracle's reason.
    pub failures: Vec<(String, VerdictReason)>,
}

/// Oracle over `B + G` for every `G` in the family.
pub fn ultra_roth_probe(b: &Biadjacency, family: &[Graph]) -> Result<UltraRothReport, CensusError> {
    let found: Vec<Option<(String, VerdictReason)>> = family
        .par_iter()
        .map(|g| {
            let inst = CompositeInstance::compose(b.s(), g, Some(b))?;
            let v = s_roth_oracle(&inst)?;
            Ok((!v.is_s_roth).then(|| (emit_graph6(g), v.reason)))
        })
        .collect::<Result<_, CensusError>>()?;
    let failures: Vec<_> = found.into_iter().flatten().collect();
    Ok(UltraRothReport { all_s_roth: failures.is_empty(), checked: family.len(), failures })
}
