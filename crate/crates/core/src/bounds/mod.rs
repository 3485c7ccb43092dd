//! Closed-form bounds on `ρ(A_α(G))`, per-graph reports comparing them with
//! computed spectral radii, and exhaustive small-order verifiers.

mod enumerate;
pub mod fixtures;
mod report;
mod verify;

pub use enumerate::{
    complete_pairs, connected_edge_masks, connected_graphs, graph_from_mask, labeled_tree, labeled_tree_count, nonisomorphic_trees, prufer_to_tree,
    random_tree, tree_canonical_form, UnionFind,
};
pub use report::{sandwich_bounds, BoundEntry, BoundsReport, Side, TIGHT_TOL};
pub use verify::{
    verify_bethe_bounds, verify_max_degree_suite, verify_max_degree_tightness, verify_path_bounds, verify_path_minimal,
    verify_reduction, verify_sandwich, verify_smith, verify_star_extremal, CheckOutcome,
    Counterexample, GraphFamily, MaxDegreeTightness, SuiteReport, LABELED_TREE_MAX_N,
    MAX_COUNTEREXAMPLES,
};

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::AlphaParam;

/// Upper bound on `ρ(A_α(T))` for a tree of maximum degree `Δ ≥ 2`:
/// `αΔ + 2(1−α)√(Δ−1)`. Strict for every tree when `α < 1`.
pub fn max_degree_tree_bound(a: AlphaParam, delta: usize) -> Result<f64> {
    if delta < 2 {
        return Err(Error::InvalidArgument(format!("need max degree >= 2, got {delta}")));
    }
    let d = delta as f64;
    Ok(a.alpha() * d + 2.0 * a.beta() * (d - 1.0).sqrt())
}

/// `ρ(A_α(K_{1,n−1})) = (αn + √(α²n² + 4(n−1)(1−2α))) / 2`, the maximum of
/// `ρ(A_α(T))` over trees of order `n ≥ 2`.
pub fn star_bound(a: AlphaParam, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need order >= 2, got {n}")));
    }
    let (alpha, n) = (a.alpha(), n as f64);
    let disc = alpha * alpha * n * n + 4.0 * (n - 1.0) * (1.0 - 2.0 * alpha);
    Ok((alpha * n + disc.max(0.0).sqrt()) / 2.0)
}

/// `ρ(A(P_n)) = 2cos(π/(n+1))`.
pub fn path_adjacency_radius(n: usize) -> f64 {
    2.0 * (PI / (n as f64 + 1.0)).cos()
}

/// `ρ(Q(P_n)) = 2 + 2cos(π/n)`.
pub fn path_signless_radius(n: usize) -> f64 {
    2.0 + 2.0 * (PI / n as f64).cos()
}

/// `(lower, upper)` bounds on `ρ(A_α(P_n))`.
///
/// Upper: `2α + 2(1−α)cos(π/(n+1))` for `α < 1/2`, `2α + 2(1−α)cos(π/n)`
/// otherwise; exact at `α ∈ {0, 1/2, 1}`.
/// Lower: `2α + 2(1−α)cos(π/n)` for `α ≤ 1/2`,
/// `2α + 2α·cos(π/n) − 2(2α−1)cos(π/(n+1))` otherwise; exact at `α = 1/2`.
pub fn path_bounds(a: AlphaParam, n: usize) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need order >= 2, got {n}")));
    }
    let alpha = a.alpha();
    let c_n = (PI / n as f64).cos();
    let c_n1 = (PI / (n as f64 + 1.0)).cos();
    let upper = if alpha < 0.5 {
        2.0 * alpha + 2.0 * (1.0 - alpha) * c_n1
    } else {
        2.0 * alpha + 2.0 * (1.0 - alpha) * c_n
    };
    let lower = if alpha <= 0.5 {
        2.0 * alpha + 2.0 * (1.0 - alpha) * c_n
    } else {
        2.0 * alpha + 2.0 * alpha * c_n - 2.0 * (2.0 * alpha - 1.0) * c_n1
    };
    Ok((lower, upper))
}

/// `(lower, upper)` bounds on `ρ(A_α(B(d,k)))`:
/// `α(d+1) + 2(1−α)√d·cos(π/k) − 20α√d/k³` and `α(d+1) + 2(1−α)√d·cos(π/(k+1))`.
pub fn bethe_bounds(a: AlphaParam, d: usize, k: usize) -> Result<(f64, f64)> {
    if d < 2 || k < 2 {
        return Err(Error::InvalidArgument(format!(
            "Bethe bounds need d >= 2 and k >= 2, got d={d}, k={k}"
        )));
    }
    let (alpha, beta) = (a.alpha(), a.beta());
    let (df, kf) = (d as f64, k as f64);
    let base = alpha * (df + 1.0);
    let upper = base + 2.0 * beta * df.sqrt() * (PI / (kf + 1.0)).cos();
    let lower = base + 2.0 * beta * df.sqrt() * (PI / kf).cos() - 20.0 * alpha * df.sqrt() / kf.powi(3);
    Ok((lower, upper))
}

/// `ρ(Q(B(d,k))) = (d+1) + 2√d·cos(π/k)`.
pub fn bethe_signless_radius(d: usize, k: usize) -> f64 {
    (d as f64 + 1.0) + 2.0 * (d as f64).sqrt() * (PI / k as f64).cos()
}

/// `cos(π/(k+1)) − cos(π/k)`, the step the Bethe lower bound absorbs into
/// its `10/k³` correction.
pub fn cos_step(k: usize) -> f64 {
    (PI / (k as f64 + 1.0)).cos() - (PI / k as f64).cos()
}

/// `{0, 0.1, …, 1}` built as `i / 10` so the grid points are exact decimals.
pub fn decile_alphas() -> Vec<AlphaParam> {
    (0..=10).map(|i| AlphaParam::new(f64::from(i) / 10.0).expect("in range")).collect()
}

/// `{0, 0.25, 0.5, 0.75, 1}`.
pub fn quartile_alphas() -> Vec<AlphaParam> {
    [0.0, 0.25, 0.5, 0.75, 1.0].iter().map(|&x| AlphaParam::new(x).expect("in range")).collect()
}
