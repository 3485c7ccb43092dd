use super::jacobi::dense_eigenvalues;
use crate::error::{Error, Result};
use crate::graph::{AlphaParam, DenseSymMatrix, Graph};

pub const MAX_POWER_ITERATIONS: usize = 1_000_000;
/// Default bound on the change of successive Rayleigh quotients, relative to
/// `max(1, ρ)`.
pub const DEFAULT_PERRON_TOL: f64 = 1e-14;
/// Residual `‖Mx − ρx‖` required on exit, relative to `max(1, ρ)`.
const RESIDUAL_TOL: f64 = 1e-10;

/// Spectral radius and positive unit Perron vector of a nonnegative matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronPair {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
}

impl PerronPair {
    /// `‖Mx − ρx‖₂`.
    pub fn residual(&self, m: &DenseSymMatrix) -> f64 {
        m.mul_vec(&self.vector)
            .iter()
            .zip(&self.vector)
            .map(|(mx, x)| (mx - self.rho * x).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

/// Dominant eigenpair of an irreducible nonnegative symmetric matrix.
///
/// Power iteration on `M + σI` with `σ` one more than the largest row sum, so
/// that `ρ + σ` strictly dominates every other shifted eigenvalue in modulus
/// even when `−ρ` is an eigenvalue (bipartite graphs at `α = 0`). The start
/// vector is all-ones, which keeps iterates positive.
pub fn perron(m: &DenseSymMatrix, tol: f64) -> Result<PerronPair> {
    if !m.is_nonnegative() {
        return Err(Error::InvalidArgument("perron requires a nonnegative matrix".into()));
    }
    let n = m.order();
    let shift = m.max_row_sum() + 1.0;
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut mx = m.mul_vec(&x);
    let mut rq = dot(&x, &mx);

    for iteration in 1..=MAX_POWER_ITERATIONS {
        let mut y: Vec<f64> = mx.iter().zip(&x).map(|(a, b)| a + shift * b).collect();
        let norm = dot(&y, &y).sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        x = y;
        mx = m.mul_vec(&x);
        let next = dot(&x, &mx);
        let scale = next.abs().max(1.0);
        let converged = (next - rq).abs() <= tol * scale && {
            let r: f64 = mx.iter().zip(&x).map(|(a, b)| (a - next * b).powi(2)).sum();
            r.sqrt() <= RESIDUAL_TOL * scale
        };
        rq = next;
        if converged {
            return Ok(PerronPair { rho: rq, vector: x, iterations: iteration });
        }
    }
    Err(Error::NoConvergence { iterations: MAX_POWER_ITERATIONS })
}

/// `ρ(A_α(G))`.
///
/// Connected graphs go through [`perron`], falling back to the dense oracle
/// when a nearly repeated top eigenvalue exhausts the iteration cap. At `α = 1` the matrix is `D(G)` and
/// the answer is `Δ` exactly; disconnected graphs take the maximum over
/// components of the dense oracle's largest eigenvalue.
pub fn spectral_radius(g: &Graph, a: AlphaParam) -> Result<f64> {
    if g.size() == 0 {
        return Ok(0.0);
    }
    if a.alpha() == 1.0 {
        return Ok(g.max_degree() as f64);
    }
    if g.is_connected() {
        let m = g.alpha_matrix(a);
        return match perron(&m, DEFAULT_PERRON_TOL) {
            Ok(p) => Ok(p.rho),
            Err(Error::NoConvergence { .. }) => Ok(dense_eigenvalues(&m).last().copied().unwrap_or(0.0)),
            Err(e) => Err(e),
        };
    }
    let mut rho: f64 = 0.0;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced_subgraph(&comp)?;
        let values = dense_eigenvalues(&sub.alpha_matrix(a));
        rho = rho.max(values.last().copied().unwrap_or(0.0));
    }
    Ok(rho)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
