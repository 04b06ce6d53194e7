//! Numerical tolerances used throughout the crate.

use crate::scalar::Real;

/// Relative eigen-residual tolerance (f64).
pub const EIG_TOL: f64 = 1e-10;
/// Relative width of the cluster counted as the smallest eigenvalue.
pub const CLUSTER_TOL: f64 = 1e-7;
/// Entries with `|x_i| <= SIGN_TOL * ‖x‖∞` count as zero in sign checks.
pub const SIGN_TOL: f64 = 1e-7;
/// Off-diagonal entries `<= Z_TOL` count as nonpositive.
pub const Z_TOL: f64 = 1e-10;
/// Inverse entries must exceed `INV_POS_TOL * max|entry|` to count as positive.
pub const INV_POS_TOL: f64 = 1e-12;
/// Distance from an integer below which an eigenvalue is re-derived exactly.
pub const INTEGER_SNAP: f64 = 1e-7;

/// Residual tolerance scaled to the precision of `T`.
pub fn eig_tol<T: Real>() -> T {
    T::of(EIG_TOL).max(T::epsilon() * T::of(1e5))
}

/// Cluster tolerance around `lambda1`, scaled to the precision of `T`.
pub fn cluster_tol<T: Real>(lambda1: T) -> T {
    T::of(CLUSTER_TOL).max(T::epsilon() * T::of(1e4)) * (T::one() + lambda1.abs())
}

pub fn sign_tol<T: Real>(x: &[T]) -> T {
    let norm = x.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    T::of(SIGN_TOL).max(T::epsilon() * T::of(1e3)) * norm
}
