use serde::{Deserialize, Serialize};

use super::{max_degree_tree_bound, star_bound};
use crate::eigen::spectral_radius;
use crate::error::Result;
use crate::format::{round_sig, serialize_sig};
use crate::graph::{AlphaParam, Graph};

/// A bound row is tight when its slack is at most this in absolute value.
pub const TIGHT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// One bound evaluated against `ρ(A_α(G))`.
///
/// `slack` is signed so that a violated bound is negative: `value − ρ` for
/// upper bounds and `ρ − value` for lower bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub side: Side,
    #[serde(serialize_with = "serialize_sig")]
    pub value: f64,
    #[serde(serialize_with = "serialize_sig")]
    pub slack: f64,
    pub applicable: bool,
    pub tight: bool,
}

impl BoundEntry {
    fn new(name: &str, side: Side, value: f64, rho: f64, applicable: bool) -> Self {
        let slack = match side {
            Side::Upper => value - rho,
            Side::Lower => rho - value,
        };
        BoundEntry {
            name: name.to_string(),
            side,
            value,
            slack,
            applicable,
            tight: slack.abs() <= TIGHT_TOL,
        }
    }

    pub fn violated(&self) -> bool {
        self.applicable && self.slack < -TIGHT_TOL
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub graph: String,
    pub n: usize,
    #[serde(serialize_with = "serialize_sig")]
    pub alpha: f64,
    /// `ρ(A_α(G))`.
    #[serde(serialize_with = "serialize_sig")]
    pub rho: f64,
    /// `ρ(A(G))`.
    #[serde(serialize_with = "serialize_sig")]
    pub rho_adjacency: f64,
    /// `ρ(Q(G))`.
    #[serde(serialize_with = "serialize_sig")]
    pub rho_signless: f64,
    /// `ρ(A_{1−α}(G))`.
    #[serde(serialize_with = "serialize_sig")]
    pub rho_complement: f64,
    pub max_degree: usize,
    pub bounds: Vec<BoundEntry>,
    #[serde(default)]
    pub counterexamples: Vec<String>,
}

impl BoundsReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.bounds.iter().filter(|b| b.violated())
    }

    /// Floats rounded to serialization precision.
    pub fn rounded(&self) -> BoundsReport {
        let mut r = self.clone();
        for x in [
            &mut r.alpha,
            &mut r.rho,
            &mut r.rho_adjacency,
            &mut r.rho_signless,
            &mut r.rho_complement,
        ] {
            *x = round_sig(*x);
        }
        for b in &mut r.bounds {
            b.value = round_sig(b.value);
            b.slack = round_sig(b.slack);
        }
        r
    }
}

/// Evaluates every applicable bound on `ρ(A_α(G))`:
///
/// | name | side | value | applies |
/// |---|---|---|---|
/// | `adjacency_lower` | lower | `ρ(A)` | always |
/// | `max_degree_upper` | upper | `Δ` | always |
/// | `signless_adjacency_upper` | upper | `αρ(Q) + (1−2α)ρ(A)` | `α ≤ 1/2` |
/// | `signless_degree_upper` | upper | `(1−α)ρ(Q) + (2α−1)Δ` | `α ≥ 1/2` |
/// | `signless_degree_lower` | lower | `(1−α)ρ(Q) + (2α−1)Δ` | `α ≤ 1/2` |
/// | `signless_adjacency_lower` | lower | `αρ(Q) + (1−2α)ρ(A)` | `α ≥ 1/2` |
/// | `complement_sum_lower` | lower | `ρ(Q) − ρ(A_{1−α})` | always |
/// | `tree_max_degree_upper` | upper | `αΔ + 2(1−α)√(Δ−1)` | trees, `Δ ≥ 2` |
/// | `tree_order_upper` | upper | star radius of order `n` | trees |
pub fn sandwich_bounds(g: &Graph, graph_id: &str, a: AlphaParam) -> Result<BoundsReport> {
    let alpha = a.alpha();
    let rho = spectral_radius(g, a)?;
    let rho_a = spectral_radius(g, AlphaParam::ZERO)?;
    let rho_q = 2.0 * spectral_radius(g, AlphaParam::HALF)?;
    let rho_c = spectral_radius(g, a.complement())?;
    let delta = g.max_degree();
    let df = delta as f64;

    let qa = alpha * rho_q + (1.0 - 2.0 * alpha) * rho_a;
    let qd = (1.0 - alpha) * rho_q + (2.0 * alpha - 1.0) * df;
    let low = alpha <= 0.5;
    let high = alpha >= 0.5;

    let mut bounds = vec![
        BoundEntry::new("adjacency_lower", Side::Lower, rho_a, rho, true),
        BoundEntry::new("max_degree_upper", Side::Upper, df, rho, true),
        BoundEntry::new("signless_adjacency_upper", Side::Upper, qa, rho, low),
        BoundEntry::new("signless_degree_upper", Side::Upper, qd, rho, high),
        BoundEntry::new("signless_degree_lower", Side::Lower, qd, rho, low),
        BoundEntry::new("signless_adjacency_lower", Side::Lower, qa, rho, high),
        BoundEntry::new("complement_sum_lower", Side::Lower, rho_q - rho_c, rho, true),
    ];
    if g.is_tree() {
        if delta >= 2 {
            let t = max_degree_tree_bound(a, delta)?;
            bounds.push(BoundEntry::new("tree_max_degree_upper", Side::Upper, t, rho, true));
        }
        let s = star_bound(a, g.order())?;
        bounds.push(BoundEntry::new("tree_order_upper", Side::Upper, s, rho, true));
    }

    Ok(BoundsReport {
        graph: graph_id.to_string(),
        n: g.order(),
        alpha,
        rho,
        rho_adjacency: rho_a,
        rho_signless: rho_q,
        rho_complement: rho_c,
        max_degree: delta,
        bounds,
        counterexamples: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::decile_alphas;

    #[test]
    fn regular_graph_rows_are_all_tight() {
        for g in [Graph::cycle(7).unwrap(), Graph::complete(5).unwrap()] {
            for a in decile_alphas() {
                let r = sandwich_bounds(&g, "regular", a).unwrap();
                for b in r.bounds.iter().filter(|b| b.applicable) {
                    assert!(b.tight, "{} at alpha {}: slack {}", b.name, a, b.slack);
                }
            }
        }
    }

    #[test]
    fn half_makes_both_signless_rows_coincide() {
        let g = Graph::smith_f8();
        let r = sandwich_bounds(&g, "F8", AlphaParam::HALF).unwrap();
        let up = r.entry("signless_adjacency_upper").unwrap();
        let up2 = r.entry("signless_degree_upper").unwrap();
        let lo = r.entry("signless_degree_lower").unwrap();
        assert!(up.applicable && up2.applicable && lo.applicable);
        assert!((up.value - r.rho_signless / 2.0).abs() < 1e-12);
        assert!((up.value - up2.value).abs() < 1e-12);
        assert!(up.tight && lo.tight);
    }

    #[test]
    fn irregular_interior_alpha_is_strict() {
        let g = Graph::star(6).unwrap();
        for x in [0.1, 0.25, 0.4] {
            let r = sandwich_bounds(&g, "star", AlphaParam::new(x).unwrap()).unwrap();
            let b = r.entry("signless_adjacency_upper").unwrap();
            assert!(b.applicable && !b.tight && b.slack > 0.0);
            assert_eq!(r.violations().count(), 0);
        }
    }

    #[test]
    fn star_attains_order_bound() {
        let g = Graph::star(7).unwrap();
        for a in decile_alphas() {
            let r = sandwich_bounds(&g, "star", a).unwrap();
            assert!(r.entry("tree_order_upper").unwrap().tight);
        }
    }

    #[test]
    fn json_round_trip_is_stable() {
        let r = sandwich_bounds(&Graph::smith_f7(), "F7", AlphaParam::new(0.3).unwrap()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: BoundsReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r.rounded());
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
