use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CompositeInstance, InstanceError};

/// A single edit of an instance. Vertex indices are global, T-first
/// (`0..t` is T, `t..t+s` is S).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NoiseOp {
    /// Remove the B-edge between a T-vertex and an S-vertex.
    DeleteCross { t_vertex: usize, s_vertex: usize },
    /// Add an edge of G between two T-vertices.
    AddIntra { i: usize, j: usize },
    /// A cross deletion drawn uniformly among those leaving a valid instance.
    RandomDeleteCross,
    /// An intra addition drawn uniformly among non-edges of G.
    RandomAddIntra,
}

fn delete_cross(inst: &CompositeInstance, tv: usize, sv: usize) -> Result<CompositeInstance, InstanceError> {
    let t = inst.t();
    if tv >= t {
        return Err(InstanceError::NotInT(tv));
    }
    if sv < t || sv >= inst.n() {
        return Err(InstanceError::NotInS(sv));
    }
    let c = sv - t;
    if !inst.k().get(tv, c) {
        return Err(InstanceError::MissingCrossEdge { t_vertex: tv, s_vertex: sv });
    }
    let mut k = inst.k().clone();
    k.set(tv, c, false);
    inst.with_parts(inst.g().clone(), k)
}

fn add_intra(inst: &CompositeInstance, i: usize, j: usize) -> Result<CompositeInstance, InstanceError> {
    for v in [i, j] {
        if v >= inst.t() {
            return Err(InstanceError::NotInT(v));
        }
    }
    if i == j {
        return Err(InstanceError::SameVertex(i));
    }
    if inst.g().has_edge(i, j) {
        return Err(InstanceError::ExistingIntraEdge(i.min(j), i.max(j)));
    }
    let mut g = inst.g().clone();
    g.add_edge(i, j)?;
    inst.with_parts(g, inst.k().clone())
}

/// Applies `ops` in order, validating after each. Random ops draw from a
/// ChaCha8 stream seeded by `seed`, so the result is a function of
/// `(inst, ops, seed)`.
pub fn apply_noise(inst: &CompositeInstance, ops: &[NoiseOp], seed: u64) -> Result<CompositeInstance, InstanceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = inst.clone();
    for op in ops {
        cur = match *op {
            NoiseOp::DeleteCross { t_vertex, s_vertex } => delete_cross(&cur, t_vertex, s_vertex)?,
            NoiseOp::AddIntra { i, j } => add_intra(&cur, i, j)?,
            NoiseOp::RandomDeleteCross => {
                let t = cur.t();
                let mut cands: Vec<(usize, usize)> = (0..t)
                    .flat_map(|i| (0..cur.s()).map(move |c| (i, t + c)))
                    .filter(|&(i, sv)| cur.k().get(i, sv - t))
                    .collect();
                cands.shuffle(&mut rng);
                cands
                    .into_iter()
                    .find_map(|(i, sv)| delete_cross(&cur, i, sv).ok())
                    .ok_or(InstanceError::NoValidTarget("cross deletion"))?
            }
            NoiseOp::RandomAddIntra => {
                let t = cur.t();
                let cands: Vec<(usize, usize)> = (0..t)
                    .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
                    .filter(|&(i, j)| !cur.g().has_edge(i, j))
                    .collect();
                let &(i, j) = cands.choose(&mut rng).ok_or(InstanceError::NoValidTarget("intra addition"))?;
                add_intra(&cur, i, j)?
            }
        };
    }
    Ok(cur)
}
