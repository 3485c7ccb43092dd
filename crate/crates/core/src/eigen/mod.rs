//! Eigenvalue engines.
//!
//! - [`tridiagonal_eigenvalues`]: Sturm-sequence bisection for symmetric
//!   tridiagonal matrices. Used by the Bethe-tree reduction.
//! - [`dense_eigen_oracle`]: cyclic Jacobi rotations for dense symmetric
//!   matrices. Slow but independent of everything else here; the reference
//!   every other path is checked against.
//! - [`perron`] / [`spectral_radius`]: shifted power iteration for the
//!   dominant eigenpair of an irreducible nonnegative matrix.

mod jacobi;
mod perron;
mod tridiagonal;

pub use jacobi::{dense_eigen_oracle, dense_eigenvalues, EigenResult};
pub use perron::{perron, spectral_radius, PerronPair, DEFAULT_PERRON_TOL, MAX_POWER_ITERATIONS};
pub use tridiagonal::{sturm_count, tridiagonal_eigenvalues, SymTridiagonal, DEFAULT_BISECTION_TOL};
