//! Spectra of the convex combinations `A_α(G) = α·D(G) + (1−α)·A(G)` of a
//! graph's degree and adjacency matrices.
//!
//! The crate has four layers:
//!
//! - [`graph`]: simple undirected graphs, named fixtures (paths, stars,
//!   cycles, Smith graphs, generalized Bethe trees) and dense assembly of
//!   `D`, `A`, `Q = D + A`, `L = D − A` and `A_α`.
//! - [`eigen`]: Sturm bisection for symmetric tridiagonals, a cyclic Jacobi
//!   oracle for dense symmetric matrices, and shifted power iteration for
//!   Perron pairs.
//! - [`bethe`]: the level-polynomial reduction that turns the `A_α`-spectrum of
//!   a generalized Bethe tree into the spectra of `k` small tridiagonals.
//! - [`bounds`]: closed-form spectral radius bounds, per-graph reports and
//!   exhaustive small-order verifiers.
//!
//! The [`cli`] module backs the `alpha-spectra` binary.

pub mod bethe;
pub mod bounds;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod format;
pub mod graph;
pub mod spectrum;

pub use bethe::GeneralizedBetheSpec;
pub use eigen::{EigenResult, PerronPair, SymTridiagonal};
pub use error::{Error, Result};
pub use graph::{AlphaParam, DenseSymMatrix, Graph};
pub use spectrum::Spectrum;
