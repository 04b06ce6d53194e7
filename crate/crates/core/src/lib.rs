//! Spectral analysis of graphs `H = B + G` built from a bipartite scaffold `B`
//! between an independent set `S` and its complement `T`, plus intra-`T`
//! edges `G`.
//!
//! The central question is whether the eigenvector of the smallest
//! signless Laplacian eigenvalue of `H` is positive on `S` and negative on
//! `T` ("S-Roth"). [`roth::s_roth_oracle`] decides it from the spectrum;
//! the rest of [`roth`] provides the matrix certificates that imply or
//! characterize it.

pub mod bounds;
pub mod census;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod roth;
pub mod scalar;
pub mod spectra;
pub mod tol;

pub use graph::{Biadjacency, CompositeInstance, Graph};
pub use scalar::Real;

/// Double-precision dense matrix.
pub type Mat = linalg::Matrix<f64>;
/// Double-precision symmetric matrix.
pub type SymMat = linalg::SymmetricMatrix<f64>;
