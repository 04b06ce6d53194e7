//! Laplacian matrices of graphs and their smallest eigenpair.

use crate::graph::{CompositeInstance, Graph};
use crate::linalg::{full_spectrum, LinalgError, SymmetricMatrix};
use crate::scalar::Real;
use crate::tol;

/// `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian<T: Real>(g: &Graph) -> SymmetricMatrix<T> {
    SymmetricMatrix::from_upper(g.n(), |i, j| {
        if i == j {
            T::of_usize(g.degree(i))
        } else if g.has_edge(i, j) {
            T::one()
        } else {
            T::zero()
        }
    })
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian<T: Real>(g: &Graph) -> SymmetricMatrix<T> {
    SymmetricMatrix::from_upper(g.n(), |i, j| {
        if i == j {
            T::of_usize(g.degree(i))
        } else if g.has_edge(i, j) {
            -T::one()
        } else {
            T::zero()
        }
    })
}

/// Integer copy of `Q(G)` for exact kernel computations.
pub fn signless_laplacian_int(g: &Graph) -> SymmetricMatrix<i64> {
    SymmetricMatrix::from_upper(g.n(), |i, j| {
        if i == j {
            g.degree(i) as i64
        } else {
            g.has_edge(i, j) as i64
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmallestEigenpair<T> {
    pub mu: T,
    /// Unit eigenvector for `mu`.
    pub vector: Vec<T>,
    /// Number of eigenvalues within the cluster tolerance of `mu`.
    pub multiplicity: usize,
    /// Second smallest eigenvalue, if any.
    pub gap_to: Option<T>,
    /// Residual bound of the decomposition.
    pub residual: T,
    /// `x(T)` when split from a composite instance.
    pub w: Option<Vec<T>>,
    /// `x(S)` when split from a composite instance.
    pub z: Option<Vec<T>>,
}

/// λ₁ with its eigenvector, normalized so the entry of largest modulus
/// (first on ties) is positive.
pub fn smallest_eigenpair<T: Real>(m: &SymmetricMatrix<T>) -> Result<SmallestEigenpair<T>, LinalgError> {
    let es = full_spectrum(m)?;
    let mu = es.smallest();
    let multiplicity = es.multiplicity_of_smallest(tol::cluster_tol(mu));
    let mut vector = es.vectors[0].clone();
    let pivot = vector.iter().fold(T::zero(), |best, &v| if v.abs() > best.abs() { v } else { best });
    if pivot < T::zero() {
        vector.iter_mut().for_each(|v| *v = -*v);
    }
    Ok(SmallestEigenpair {
        mu,
        vector,
        multiplicity,
        gap_to: es.values.get(1).copied(),
        residual: es.residual_bound,
        w: None,
        z: None,
    })
}

/// Smallest eigenpair of `Q(H)` split into `w = x(T)` and `z = x(S)`, with the
/// sign fixed so that the S-entries sum to a nonnegative value.
pub fn composite_eigenpair<T: Real>(inst: &CompositeInstance) -> Result<SmallestEigenpair<T>, LinalgError> {
    let mut p = smallest_eigenpair(&signless_laplacian::<T>(inst.h()))?;
    let t = inst.t();
    let s_sum: T = p.vector[t..].iter().copied().sum();
    if s_sum < T::zero() {
        p.vector.iter_mut().for_each(|v| *v = -*v);
    }
    p.w = Some(p.vector[..t].to_vec());
    p.z = Some(p.vector[t..].to_vec());
    Ok(p)
}

/// `μ(G)`.
pub fn mu<T: Real>(g: &Graph) -> Result<T, LinalgError> {
    Ok(full_spectrum(&signless_laplacian::<T>(g))?.smallest())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("zero vector has no Rayleigh quotient")]
pub struct ZeroVector;

/// `Σ_{ij∈E} (x_i + x_j)² / xᵀx`; never below `μ(G)`.
pub fn rayleigh_quotient_signless<T: Real>(g: &Graph, x: &[T]) -> Result<T, ZeroVector> {
    let norm: T = x.iter().map(|&v| v * v).sum();
    if norm == T::zero() {
        return Err(ZeroVector);
    }
    let num: T = g.edges().map(|(i, j)| (x[i] + x[j]) * (x[i] + x[j])).sum();
    Ok(num / norm)
}

/// `4e / (s + t)` with `e = |E(G)|`, an upper bound on `μ(H)`.
pub fn mu_upper_bound_cut(inst: &CompositeInstance) -> f64 {
    4.0 * inst.g().edge_count() as f64 / inst.n() as f64
}

/// `2δ(G) − λ_max(L(G))`, a lower bound on `μ(G)`.
pub fn mu_lower_bound_degrees<T: Real>(g: &Graph) -> Result<T, LinalgError> {
    if g.n() == 0 {
        return Ok(T::zero());
    }
    let lmax = full_spectrum(&laplacian::<T>(g))?.largest();
    Ok(T::of_usize(2 * g.min_degree()) - lmax)
}
