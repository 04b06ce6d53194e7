use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("H is disconnected")]
    Disconnected,
    #[error("S-vertex {0} has no neighbour in T")]
    ZeroColumn(usize),
    #[error("S is not independent: edge {{{0},{1}}}")]
    NotIndependent(usize, usize),
    #[error("scaffold is {rows}x{cols}, expected {t}x{s}")]
    ScaffoldShape { rows: usize, cols: usize, t: usize, s: usize },
    #[error("S must be a nonempty proper subset of the vertices")]
    BadPartition,
    #[error("T-vertices must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("{0} is not a T-vertex")]
    NotInT(usize),
    #[error("{0} is not an S-vertex")]
    NotInS(usize),
    #[error("no cross edge between T-vertex {t_vertex} and S-vertex {s_vertex}")]
    MissingCrossEdge { t_vertex: usize, s_vertex: usize },
    #[error("G already has edge {{{0},{1}}}")]
    ExistingIntraEdge(usize, usize),
    #[error("no valid target left for a random {0}")]
    NoValidTarget(&'static str),
}

/// 0/1 matrix with rows indexed by T and columns by S.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Biadjacency {
    t: usize,
    s: usize,
    bits: Vec<bool>,
}

impl Biadjacency {
    pub fn complete(t: usize, s: usize) -> Self {
        Biadjacency { t, s, bits: vec![true; t * s] }
    }

    pub fn zeros(t: usize, s: usize) -> Self {
        Biadjacency { t, s, bits: vec![false; t * s] }
    }

    /// From rows of 0/1 values (nonzero counts as 1).
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, InstanceError> {
        let t = rows.len();
        let s = rows.first().map_or(0, |r| r.as_ref().len());
        let mut bits = Vec::with_capacity(t * s);
        for r in rows {
            let r = r.as_ref();
            if r.len() != s {
                return Err(InstanceError::ScaffoldShape { rows: t, cols: r.len(), t, s });
            }
            bits.extend(r.iter().map(|&v| v != 0));
        }
        Ok(Biadjacency { t, s, bits })
    }

    /// From column bitmasks: bit `i` of `cols[k]` says T-vertex `i` ~ S-vertex `k`.
    pub fn from_column_masks(t: usize, cols: &[u64]) -> Self {
        let s = cols.len();
        let mut b = Biadjacency::zeros(t, s);
        for (k, &m) in cols.iter().enumerate() {
            for i in 0..t {
                b.set(i, k, m >> i & 1 == 1);
            }
        }
        b
    }

    pub fn column_masks(&self) -> Vec<u64> {
        (0..self.s)
            .map(|k| (0..self.t).fold(0u64, |m, i| m | ((self.get(i, k) as u64) << i)))
            .collect()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn get(&self, i: usize, k: usize) -> bool {
        self.bits[i * self.s + k]
    }

    pub fn set(&mut self, i: usize, k: usize, v: bool) {
        self.bits[i * self.s + k] = v;
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.s).filter(|&k| self.get(i, k)).count()
    }

    pub fn col_sum(&self, k: usize) -> usize {
        (0..self.t).filter(|&i| self.get(i, k)).count()
    }

    pub fn is_complete(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn transpose(&self) -> Biadjacency {
        let mut out = Biadjacency::zeros(self.s, self.t);
        for i in 0..self.t {
            for k in 0..self.s {
                out.set(k, i, self.get(i, k));
            }
        }
        out
    }

    /// The bipartite graph on `t + s` vertices, T first.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.t + self.s);
        for i in 0..self.t {
            for k in 0..self.s {
                if self.get(i, k) {
                    g.insert(i, self.t + k);
                }
            }
        }
        g
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.t).map(|i| (0..self.s).map(|k| self.get(i, k) as u8).collect()).collect()
    }
}

impl fmt::Debug for Biadjacency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Biadjacency{:?}", self.to_rows())
    }
}

/// `H` with a distinguished independent set `S`, stored with the `t` vertices
/// of `T` first (`0..t`) and the `s` vertices of `S` last (`t..t+s`).
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeInstance {
    h: Graph,
    g: Graph,
    b: Graph,
    k: Biadjacency,
    d1: Vec<usize>,
    d2: Vec<usize>,
    s_maximal: bool,
}

impl CompositeInstance {
    /// `H` from the intra-side graph `g` on T and a scaffold; `None` means the
    /// complete scaffold, giving `H = K̄_s ∨ G`.
    pub fn compose(s: usize, g: &Graph, scaffold: Option<&Biadjacency>) -> Result<Self, InstanceError> {
        let t = g.n();
        let k = match scaffold {
            Some(k) => {
                if k.t() != t || k.s() != s {
                    return Err(InstanceError::ScaffoldShape { rows: k.t(), cols: k.s(), t, s });
                }
                k.clone()
            }
            None => Biadjacency::complete(t, s),
        };
        Self::from_parts(g.clone(), k)
    }

    /// Builds from a whole graph and a chosen vertex set `S`; vertices are
    /// reordered T-first, each side keeping its relative order.
    pub fn from_graph(h: &Graph, s_set: &[usize]) -> Result<Self, InstanceError> {
        let n = h.n();
        let mut in_s = vec![false; n];
        for &v in s_set {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
            }
            in_s[v] = true;
        }
        let s_list: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
        let t_list: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
        if s_list.is_empty() || t_list.is_empty() {
            return Err(InstanceError::BadPartition);
        }
        for (a, &u) in s_list.iter().enumerate() {
            for &v in &s_list[a + 1..] {
                if h.has_edge(u, v) {
                    return Err(InstanceError::NotIndependent(u, v));
                }
            }
        }
        let g = h.induced(&t_list);
        let mut k = Biadjacency::zeros(t_list.len(), s_list.len());
        for (i, &u) in t_list.iter().enumerate() {
            for (c, &v) in s_list.iter().enumerate() {
                k.set(i, c, h.has_edge(u, v));
            }
        }
        Self::from_parts(g, k)
    }

    fn from_parts(g: Graph, k: Biadjacency) -> Result<Self, InstanceError> {
        let (t, s) = (k.t(), k.s());
        if t == 0 || s == 0 {
            return Err(InstanceError::BadPartition);
        }
        if let Some(c) = (0..s).find(|&c| k.col_sum(c) == 0) {
            return Err(InstanceError::ZeroColumn(c));
        }
        let b = k.to_graph();
        let mut h = b.clone();
        for (u, v) in g.edges() {
            h.insert(u, v);
        }
        if !h.is_connected() {
            return Err(InstanceError::Disconnected);
        }
        let d1: Vec<usize> = (0..t).map(|i| k.row_sum(i)).collect();
        let d2: Vec<usize> = (0..s).map(|c| k.col_sum(c)).collect();
        let s_maximal = d1.iter().all(|&d| d > 0);
        Ok(CompositeInstance { h, g, b, k, d1, d2, s_maximal })
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    /// Subgraph induced on T, labelled `0..t`.
    pub fn g(&self) -> &Graph {
        &self.g
    }

    /// All S–T edges of H.
    pub fn b(&self) -> &Graph {
        &self.b
    }

    pub fn k(&self) -> &Biadjacency {
        &self.k
    }

    /// Row sums of K: number of S-neighbours of each T-vertex.
    pub fn d1(&self) -> &[usize] {
        &self.d1
    }

    /// Column sums of K: the degrees of the S-vertices.
    pub fn d2(&self) -> &[usize] {
        &self.d2
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn t(&self) -> usize {
        self.k.t()
    }

    pub fn s(&self) -> usize {
        self.k.s()
    }

    /// Whether every T-vertex has an S-neighbour, i.e. S is maximal independent.
    pub fn s_maximal(&self) -> bool {
        self.s_maximal
    }

    pub fn is_complete_scaffold(&self) -> bool {
        self.k.is_complete()
    }

    /// H is bipartite with parts (S, T) exactly when G is edgeless.
    pub fn g_is_edgeless(&self) -> bool {
        self.g.edge_count() == 0
    }

    /// Global indices of the S-vertices.
    pub fn s_vertices(&self) -> std::ops::Range<usize> {
        self.t()..self.n()
    }

    pub fn t_vertices(&self) -> std::ops::Range<usize> {
        0..self.t()
    }

    /// `N_ij`: S-columns (`0..s`) adjacent in B to both T-vertices `i` and `j`.
    pub fn common_neighbors(&self, i: usize, j: usize) -> Result<Vec<usize>, InstanceError> {
        if i >= self.t() {
            return Err(InstanceError::NotInT(i));
        }
        if j >= self.t() {
            return Err(InstanceError::NotInT(j));
        }
        if i == j {
            return Err(InstanceError::SameVertex(i));
        }
        Ok((0..self.s()).filter(|&c| self.k.get(i, c) && self.k.get(j, c)).collect())
    }

    pub(crate) fn with_parts(&self, g: Graph, k: Biadjacency) -> Result<Self, InstanceError> {
        Self::from_parts(g, k)
    }

    pub fn to_json(&self) -> InstanceJson {
        InstanceJson {
            n: self.n(),
            s: self.s(),
            t: self.t(),
            s_set: self.s_vertices().collect(),
            t_set: self.t_vertices().collect(),
            edges: self.h.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(j: &InstanceJson) -> Result<Self, InstanceError> {
        let h = Graph::from_edges(j.n, j.edges.iter().map(|&[u, v]| (u, v)))?;
        Self::from_graph(&h, &j.s_set)
    }
}

/// Wire form `{n, s, t, S, T, edges}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    #[serde(rename = "S")]
    pub s_set: Vec<usize>,
    #[serde(rename = "T")]
    pub t_set: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example1_k() -> Biadjacency {
        Biadjacency::from_rows(&[
            [1, 1, 1, 1, 0, 0, 0],
            [1, 1, 1, 1, 0, 0, 0],
            [1, 1, 1, 1, 0, 0, 0],
            [1, 1, 1, 1, 1, 1, 1],
        ])
        .unwrap()
    }

    #[test]
    fn complete_scaffold_example_8_8() {
        let inst = CompositeInstance::compose(4, &Graph::complete_bipartite(4, 2), None).unwrap();
        assert_eq!(inst.n(), 10);
        assert_eq!(inst.d1(), &[4; 6]);
        assert_eq!(inst.d2(), &[6; 4]);
        assert!(inst.is_complete_scaffold());
        assert!(inst.s_maximal());
    }

    #[test]
    fn printed_scaffold_column_sums() {
        let inst = CompositeInstance::compose(7, &Graph::complete(4), Some(&example1_k())).unwrap();
        assert_eq!(inst.d2(), &[4, 4, 4, 4, 1, 1, 1]);
        assert_eq!(inst.d1(), &[4, 4, 4, 7]);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert_eq!(inst.common_neighbors(i, j).unwrap(), vec![0, 1, 2, 3]);
                }
            }
        }
        assert_eq!(inst.common_neighbors(1, 1), Err(InstanceError::SameVertex(1)));
    }

    #[test]
    fn single_vertex_gives_p3() {
        let inst = CompositeInstance::compose(2, &Graph::empty(1), None).unwrap();
        assert!(inst.h().is_bipartite());
        assert_eq!(inst.h().edge_count(), 2);
        assert_eq!(inst.h().degrees(), vec![2, 1, 1]);
    }

    #[test]
    fn complete_scaffold_common_neighbors_is_all_of_s() {
        let inst = CompositeInstance::compose(5, &Graph::cycle(3), None).unwrap();
        assert_eq!(inst.common_neighbors(0, 2).unwrap().len(), 5);
    }

    #[test]
    fn invalid_instances() {
        let k = Biadjacency::from_rows(&[[1, 0], [1, 0]]).unwrap();
        assert_eq!(CompositeInstance::compose(2, &Graph::complete(2), Some(&k)), Err(InstanceError::ZeroColumn(1)));
        // two disjoint stars
        let k = Biadjacency::from_rows(&[[1, 0], [0, 1]]).unwrap();
        assert_eq!(CompositeInstance::compose(2, &Graph::empty(2), Some(&k)), Err(InstanceError::Disconnected));
        let k = Biadjacency::from_rows(&[[1, 0, 1]]).unwrap();
        assert!(matches!(CompositeInstance::compose(2, &Graph::empty(1), Some(&k)), Err(InstanceError::ScaffoldShape { .. })));
        assert_eq!(CompositeInstance::from_graph(&Graph::cycle(3), &[0, 1]), Err(InstanceError::NotIndependent(0, 1)));
    }

    #[test]
    fn maximality_flag_recorded() {
        // T-vertex 1 has no S-neighbour but is reached through G
        let k = Biadjacency::from_rows(&[[1], [0]]).unwrap();
        let inst = CompositeInstance::compose(1, &Graph::complete(2), Some(&k)).unwrap();
        assert!(!inst.s_maximal());
    }

    #[test]
    fn from_graph_reorders_t_first() {
        // star centred at 2 with S = {0,1,3}
        let h = Graph::from_edges(4, [(0, 2), (1, 2), (2, 3)]).unwrap();
        let inst = CompositeInstance::from_graph(&h, &[0, 1, 3]).unwrap();
        assert_eq!(inst.t(), 1);
        assert_eq!(inst.d2(), &[1, 1, 1]);
        let j = inst.to_json();
        assert_eq!(j.s_set, vec![1, 2, 3]);
        assert_eq!(CompositeInstance::from_json(&j).unwrap(), inst);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"S\":[1,2,3]") && text.contains("\"T\":[0]"));
    }

    #[test]
    fn complete_scaffold_degrees() {
        let g = Graph::cycle(5).disjoint_union(&Graph::path(2));
        let inst = CompositeInstance::compose(3, &g, None).unwrap();
        for v in inst.s_vertices() {
            assert_eq!(inst.h().degree(v), 7);
        }
        for v in inst.t_vertices() {
            assert_eq!(inst.h().degree(v), 3 + g.degree(v));
        }
    }
}
