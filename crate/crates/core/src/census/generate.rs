//! Graph families for the sweeps: all graphs or trees up to isomorphism,
//! optionally with bounded maximum degree, and seeded random samples.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::canon::{canonical_graph, canonical_key};
use crate::graph::Graph;

/// All graphs on `n` vertices with `Δ ≤ max_degree`, one per isomorphism
/// class, in canonical labelling. Grown one vertex at a time: bounded degree
/// is hereditary, so every such graph extends one on `n − 1` vertices.
pub fn all_graphs(n: usize, max_degree: Option<usize>) -> Vec<Graph> {
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut level = vec![Graph::empty(0)];
    for m in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let open: Vec<usize> = (0..m).filter(|&v| g.degree(v) < cap).collect();
            for mask in 0u64..1 << open.len() {
                if mask.count_ones() as usize > cap {
                    continue;
                }
                let mut h = g.disjoint_union(&Graph::empty(1));
                for (b, &v) in open.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        h.add_edge(v, m).expect("fresh edge");
                    }
                }
                let c = canonical_graph(&h);
                if seen.insert(canonical_key(&c)) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level
}

/// All trees on `n` vertices with `Δ ≤ max_degree`, up to isomorphism.
pub fn all_trees(n: usize, max_degree: Option<usize>) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    let cap = max_degree.unwrap_or(usize::MAX);
    // leaf addition never lowers a degree, so the cap prunes safely
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for v in 0..m {
                if g.degree(v) >= cap {
                    continue;
                }
                let mut h = g.disjoint_union(&Graph::empty(1));
                h.add_edge(v, m).expect("fresh edge");
                let c = canonical_graph(&h);
                if seen.insert(canonical_key(&c)) {
                    next.push(c);
                }
            }
        }
        level = next;
    }
    level
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut g = Graph::empty(n);
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        g.add_edge(leaf, v).expect("Prüfer edge");
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(rest[0], rest[1]).expect("final edge");
    g
}

/// Random graph on `n` vertices: pairs visited in random order, each kept
/// with probability `p` when both endpoints are below `max_degree`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, max_degree: Option<usize>) -> Graph {
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::empty(n);
    for (i, j) in pairs {
        if g.degree(i) < cap && g.degree(j) < cap && rng.gen_bool(p) {
            g.add_edge(i, j).expect("fresh pair");
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        // bounded degree 2 on 5 vertices: unions of paths and cycles
        assert_eq!(all_graphs(5, Some(2)).len(), 11);
        let bounded: Vec<usize> = [2, 3, 5].iter().map(|&d| all_graphs(7, Some(d)).len()).collect();
        assert_eq!(bounded, vec![29, 150, 888]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=9).map(|n| all_trees(n, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
        assert_eq!(all_trees(7, Some(2)).len(), 1);
        assert_eq!(all_trees(7, Some(6)).len(), 11);
    }

    #[test]
    fn random_families_respect_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..30 {
            let t = random_tree(&mut rng, n);
            assert!(t.is_connected() && t.edge_count() == n - 1);
            let g = random_graph(&mut rng, n, 0.5, Some(3));
            assert!(g.max_degree() <= 3);
        }
    }
}
