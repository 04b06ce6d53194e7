//! Canonical labelling of small graphs by individualization and refinement.
//!
//! The search explores every branch of the refinement tree (no automorphism
//! pruning) and keeps the lexicographically least adjacency code among the
//! leaves, so it is exact but only meant for graphs of a dozen or so vertices.

use super::Graph;

/// Adjacency code of a relabelled graph: the upper triangle packed into words.
pub type CanonKey = Vec<u64>;

/// Adjacency rows as bitmasks; canonical labelling is limited to 64 vertices.
fn bit_rows(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64, "canonical labelling supports at most 64 vertices");
    (0..g.n()).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect()
}

fn code(g: &[u64], order: &[usize]) -> CanonKey {
    let n = order.len();
    let mut key = vec![0u64; (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g[order[i]] >> order[j] & 1 == 1 {
                key[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    key
}

/// Refines an ordered partition until it is equitable.
fn refine(g: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'outer: loop {
        for w in 0..cells.len() {
            for x in 0..cells.len() {
                if cells[x].len() < 2 {
                    continue;
                }
                let wmask = cells[w].iter().fold(0u64, |m, &u| m | 1 << u);
                let count = |v: usize| (g[v] & wmask).count_ones() as usize;
                let mut keyed: Vec<(usize, usize)> = cells[x].iter().map(|&v| (count(v), v)).collect();
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut split: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (c, v) in keyed {
                    if c != last {
                        split.push(Vec::new());
                        last = c;
                    }
                    split.last_mut().unwrap().push(v);
                }
                cells.splice(x..=x, split);
                continue 'outer;
            }
        }
        return cells;
    }
}

fn search(g: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(CanonKey, Vec<usize>)>) {
    let cells = refine(g, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    match target {
        None => {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let key = code(g, &order);
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                *best = Some((key, order));
            }
        }
        Some(t) => {
            for &v in &cells[t] {
                let mut next = cells.clone();
                let rest: Vec<usize> = cells[t].iter().copied().filter(|&u| u != v).collect();
                next.splice(t..=t, [vec![v], rest]);
                search(g, next, best);
            }
        }
    }
}

/// Canonical key and the vertex order realizing it (`order[new] = old`).
pub fn canonical_form(g: &Graph) -> (CanonKey, Vec<usize>) {
    if g.n() == 0 {
        return (vec![0], vec![]);
    }
    let mut initial: Vec<(usize, usize)> = (0..g.n()).map(|v| (g.degree(v), v)).collect();
    initial.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut last = usize::MAX;
    for (d, v) in initial {
        if d != last {
            cells.push(Vec::new());
            last = d;
        }
        cells.last_mut().unwrap().push(v);
    }
    let mut best = None;
    search(&bit_rows(g), cells, &mut best);
    best.expect("search reaches at least one leaf")
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonical_form(g).0
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.relabel(&perm)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force_min(g: &Graph) -> CanonKey {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let rows = bit_rows(g);
        let mut best = code(&rows, &perm);
        // Heap's algorithm over all orders
        let mut c = vec![0; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                let k = code(&rows, &perm);
                if k < best {
                    best = k;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    #[test]
    fn isomorphic_relabellings_agree() {
        let g = Graph::cycle(6);
        let h = g.relabel(&[3, 5, 0, 2, 4, 1]);
        assert!(are_isomorphic(&g, &h));
        assert!(!are_isomorphic(&g, &Graph::complete_bipartite(3, 3)));
        assert!(!are_isomorphic(&Graph::cycle(6), &Graph::cycle(3).disjoint_union(&Graph::cycle(3))));
    }

    proptest! {
        #[test]
        fn relabelling_invariant(n in 1usize..=8, bits in any::<u64>(), shuffle in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits >> (k % 64) & 1 == 1 {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = shuffle;
            for i in (1..n).rev() {
                perm.swap(i, (s % (i as u64 + 1)) as usize);
                s /= i as u64 + 1;
            }
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_key(&g), canonical_key(&h));
            prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
        }

        #[test]
        fn distinguishes_like_brute_force(n in 1usize..=6, a in any::<u32>(), b in any::<u32>()) {
            let build = |bits: u32| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits >> k & 1 == 1 {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            };
            let (ga, gb) = (build(a), build(b));
            prop_assert_eq!(are_isomorphic(&ga, &gb), brute_force_min(&ga) == brute_force_min(&gb));
        }
    }
}
