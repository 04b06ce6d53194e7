use num_traits::{One, Zero};

use super::RothError;
use crate::graph::CompositeInstance;
use crate::linalg::exact::{rational, Rational};
use crate::linalg::{Cholesky, SymmetricMatrix};
use crate::tol;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HarmcondWitness {
    /// A G-edge whose harmonic sum `Σ_{k∈N_ij} 1/d_B(k)` is below one.
    LowSum { i: usize, j: usize, sum: Rational },
    /// A non-adjacent pair with no common S-neighbour.
    EmptyCommon { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmcondResult {
    pub holds: bool,
    /// First failing pair in lexicographic order.
    pub witness: Option<HarmcondWitness>,
}

/// Harmonic-sum sufficient condition, evaluated in exact arithmetic.
pub fn harmcond_check(inst: &CompositeInstance) -> HarmcondResult {
    let t = inst.t();
    let d2 = inst.d2();
    for i in 0..t {
        for j in i + 1..t {
            let common = inst.common_neighbors(i, j).expect("distinct T-vertices");
            let witness = if inst.g().has_edge(i, j) {
                let sum = common.iter().fold(Rational::zero(), |a, &c| a + rational(1, d2[c] as i64));
                (sum < Rational::one()).then_some(HarmcondWitness::LowSum { i, j, sum })
            } else {
                common.is_empty().then_some(HarmcondWitness::EmptyCommon { i, j })
            };
            if witness.is_some() {
                return HarmcondResult { holds: false, witness };
            }
        }
    }
    HarmcondResult { holds: true, witness: None }
}

/// `|N_ij| ≥ c^B = max_k d_B(k)` on G-edges, `N_ij ≠ ∅` elsewhere.
pub fn gc_check(inst: &CompositeInstance) -> bool {
    let c = *inst.d2().iter().max().expect("s ≥ 1");
    let t = inst.t();
    (0..t).all(|i| {
        (i + 1..t).all(|j| {
            let n = inst.common_neighbors(i, j).expect("distinct").len();
            if inst.g().has_edge(i, j) {
                n >= c
            } else {
                n > 0
            }
        })
    })
}

/// `d_B(i) ≥ (t + s)/2` for every T-vertex.
pub fn bdeg_check(inst: &CompositeInstance) -> bool {
    let n = inst.n();
    inst.d1().iter().all(|&d| 2 * d >= n)
}

/// Complete scaffold with `s ≥ t`.
pub fn st_check(inst: &CompositeInstance) -> bool {
    inst.is_complete_scaffold() && inst.s() >= inst.t()
}

/// `α_H(G) = s / (t − μ)`.
pub fn alpha_of(inst: &CompositeInstance, mu: f64) -> Result<f64, RothError> {
    if !inst.is_complete_scaffold() {
        return Err(RothError::NotCompleteScaffold);
    }
    let t = inst.t();
    if mu >= t as f64 {
        return Err(RothError::MuAtLeastT { mu, t });
    }
    Ok(inst.s() as f64 / (t as f64 - mu))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GdegCase {
    /// `δ(G) > t − s`.
    A,
    /// `δ(G) = t − s` and the complement of G is connected.
    B,
    Neither,
    /// Scaffold not complete or `t ≤ s`.
    NotApplicable,
}

impl GdegCase {
    pub fn certifies(self) -> bool {
        matches!(self, GdegCase::A | GdegCase::B)
    }
}

pub fn gdeg_check(inst: &CompositeInstance) -> GdegCase {
    let (s, t) = (inst.s(), inst.t());
    if !inst.is_complete_scaffold() || t <= s {
        return GdegCase::NotApplicable;
    }
    let delta = inst.g().min_degree();
    if delta > t - s {
        GdegCase::A
    } else if delta == t - s && inst.g().complement().is_connected() {
        GdegCase::B
    } else {
        GdegCase::Neither
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SteveResult {
    pub applicable: bool,
    pub s_roth: Option<bool>,
    /// A joinee all of whose vertices have G-degree exactly `t − s`.
    pub witness: Option<Vec<usize>>,
}

/// Exact characterization for complete scaffolds with `t > s`, `δ(G) = t − s`
/// and a disconnected complement of G.
pub fn steve_characterization(inst: &CompositeInstance) -> SteveResult {
    let (s, t) = (inst.s(), inst.t());
    let g = inst.g();
    let gated = inst.is_complete_scaffold() && t > s && g.min_degree() == t - s;
    let parts = g.join_decomposition();
    if !gated || parts.len() < 2 {
        return SteveResult { applicable: false, s_roth: None, witness: None };
    }
    let witness = parts.into_iter().find(|p| p.iter().all(|&v| g.degree(v) == t - s));
    SteveResult { applicable: true, s_roth: Some(witness.is_none()), witness }
}

/// Complete scaffold, `t > s ≥ 6` and `Δ(G) ≤ 2`.
pub fn deg2_predicate(inst: &CompositeInstance) -> bool {
    let (s, t) = (inst.s(), inst.t());
    inst.is_complete_scaffold() && t > s && s >= 6 && inst.g().max_degree() <= 2
}

/// Whether every principal submatrix of the given order has an entrywise
/// nonnegative inverse.
pub fn gavrilov_check(m: &SymmetricMatrix<f64>, order: usize) -> Result<bool, RothError> {
    let n = m.order();
    if order < 2 || order >= n {
        return Err(RothError::BadOrder { order, n });
    }
    Cholesky::factor(m).map_err(|_| RothError::NotPositiveDefinite)?;
    let mut idx: Vec<usize> = (0..order).collect();
    loop {
        let sub = m.principal_submatrix(&idx);
        let inv = Cholesky::factor(&sub).map_err(|_| RothError::NotPositiveDefinite)?.inverse();
        let cut = -tol::INV_POS_TOL * inv.as_matrix().max_abs();
        if inv.as_matrix().min_entry() < cut {
            return Ok(false);
        }
        // next combination in lexicographic order
        let Some(p) = (0..order).rev().find(|&p| idx[p] < n - order + p) else {
            return Ok(true);
        };
        idx[p] += 1;
        for q in p + 1..order {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Biadjacency, Graph};

    #[test]
    fn complete_scaffold_with_s_at_least_t() {
        let inst = CompositeInstance::compose(4, &Graph::complete(4), None).unwrap();
        assert!(st_check(&inst) && gc_check(&inst) && bdeg_check(&inst) && harmcond_check(&inst).holds);
        let inst = CompositeInstance::compose(3, &Graph::complete(4), None).unwrap();
        assert!(!st_check(&inst));
    }

    #[test]
    fn almost_complete_scaffold_passes_harmcond() {
        // K_{s,t} − e with s ≥ t + 1, over the densest G
        for (s, t) in [(5, 4), (6, 4), (7, 5)] {
            let mut k = Biadjacency::complete(t, s);
            k.set(0, 0, false);
            let inst = CompositeInstance::compose(s, &Graph::complete(t), Some(&k)).unwrap();
            assert!(harmcond_check(&inst).holds, "s={s} t={t}");
        }
    }

    #[test]
    fn empty_common_neighbourhood_witness() {
        let k = Biadjacency::from_rows(&[[1, 0], [0, 1], [1, 1]]).unwrap();
        let g = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let inst = CompositeInstance::compose(2, &g, Some(&k)).unwrap();
        let r = harmcond_check(&inst);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(HarmcondWitness::EmptyCommon { i: 0, j: 1 }));
    }

    #[test]
    fn yeast_shaped_gc() {
        // s=17, t=5, c^B = 5; G has two edges with 8 and 10 common S-neighbours
        let mut k = Biadjacency::zeros(5, 17);
        for c in 0..17 {
            k.set(0, c, c < 12);
            k.set(1, c, c < 8);
            k.set(2, c, (2..12).contains(&c));
            k.set(3, c, c >= 5);
            k.set(4, c, !(3..12).contains(&c) || c == 6);
        }
        let g = Graph::from_edges(5, [(0, 1), (0, 2)]).unwrap();
        let inst = CompositeInstance::compose(17, &g, Some(&k)).unwrap();
        assert_eq!(*inst.d2().iter().max().unwrap(), 5);
        assert_eq!(inst.common_neighbors(0, 1).unwrap().len(), 8);
        assert_eq!(inst.common_neighbors(0, 2).unwrap().len(), 10);
        assert!(gc_check(&inst));
        assert!(harmcond_check(&inst).holds);
    }

    #[test]
    fn gdeg_cases() {
        let inst = CompositeInstance::compose(2, &Graph::complete(3), None).unwrap();
        assert_eq!(gdeg_check(&inst), GdegCase::A);
        let inst = CompositeInstance::compose(4, &Graph::complete_bipartite(4, 2), None).unwrap();
        assert_eq!(gdeg_check(&inst), GdegCase::Neither);
        // δ(C_5) = 2 = t − s and C_5 is self-complementary
        let inst = CompositeInstance::compose(3, &Graph::cycle(5), None).unwrap();
        assert_eq!(gdeg_check(&inst), GdegCase::B);
        let inst = CompositeInstance::compose(5, &Graph::cycle(5), None).unwrap();
        assert_eq!(gdeg_check(&inst), GdegCase::NotApplicable);
    }

    #[test]
    fn extremal_family_always_certified() {
        for t in 4..9 {
            for s in 2..t {
                let mut g = Graph::complete(t);
                let mut removed = 0;
                'outer: for i in 0..t {
                    for j in i + 1..t {
                        if removed == s - 2 {
                            break 'outer;
                        }
                        if g.degree(i) > t - 2 && g.degree(j) > t - 2 {
                            g.remove_edge(i, j);
                            removed += 1;
                        }
                    }
                }
                let inst = CompositeInstance::compose(s, &g, None).unwrap();
                assert!(gdeg_check(&inst).certifies(), "t={t} s={s}");
            }
        }
    }

    #[test]
    fn steve_on_join_example() {
        let inst = CompositeInstance::compose(4, &Graph::complete_bipartite(4, 2), None).unwrap();
        let r = steve_characterization(&inst);
        assert!(r.applicable);
        assert_eq!(r.s_roth, Some(false));
        assert_eq!(r.witness, Some(vec![0, 1, 2, 3]));
        let inst = CompositeInstance::compose(2, &Graph::complete(4), None).unwrap();
        assert!(!steve_characterization(&inst).applicable);
    }

    #[test]
    fn alpha_values() {
        let inst = CompositeInstance::compose(4, &Graph::complete_bipartite(4, 2), None).unwrap();
        assert_eq!(alpha_of(&inst, 2.0).unwrap(), 1.0);
        assert_eq!(alpha_of(&inst, 6.0), Err(RothError::MuAtLeastT { mu: 6.0, t: 6 }));
        let bip = CompositeInstance::compose(3, &Graph::empty(5), None).unwrap();
        assert_eq!(alpha_of(&bip, 0.0).unwrap(), 0.6);
    }

    #[test]
    fn deg2_gate() {
        let inst = CompositeInstance::compose(6, &Graph::cycle(7), None).unwrap();
        assert!(deg2_predicate(&inst));
        let inst = CompositeInstance::compose(4, &Graph::path(60), None).unwrap();
        assert!(!deg2_predicate(&inst));
    }

    #[test]
    fn gavrilov_small_cases() {
        let id = SymmetricMatrix::<f64>::identity(4);
        for order in 2..4 {
            assert!(gavrilov_check(&id, order).unwrap());
        }
        assert_eq!(gavrilov_check(&id, 4), Err(RothError::BadOrder { order: 4, n: 4 }));
        let m = SymmetricMatrix::from_rows(vec![vec![2.0, 0.5], vec![0.5, 2.0]]).unwrap();
        assert_eq!(gavrilov_check(&m, 1), Err(RothError::BadOrder { order: 1, n: 2 }));
        let m = SymmetricMatrix::from_rows(vec![vec![2.0, 0.5, 0.0], vec![0.5, 2.0, 0.0], vec![0.0, 0.0, 1.0]]).unwrap();
        assert!(!gavrilov_check(&m, 2).unwrap());
    }
}
