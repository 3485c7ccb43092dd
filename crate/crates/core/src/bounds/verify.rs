//! Verification suites. Each returns a [`SuiteReport`] listing named checks
//! and the first counterexamples found; enumeration is parallel, merging is
//! order-preserving so reports are deterministic.

use rayon::prelude::*;
use serde::Serialize;

use super::fixtures::{smith_fixtures, Fixture};
use super::{
    bethe_bounds, bethe_signless_radius, complete_pairs, connected_edge_masks, cos_step,
    graph_from_mask, labeled_tree, labeled_tree_count, max_degree_tree_bound,
    nonisomorphic_trees, path_adjacency_radius, path_bounds, path_signless_radius,
    sandwich_bounds, star_bound, TIGHT_TOL,
};
use crate::bethe::GeneralizedBetheSpec;
use crate::eigen::{dense_eigenvalues, spectral_radius};
use crate::error::{Error, Result};
use crate::format::serialize_sig;
use crate::graph::{AlphaParam, Graph};

/// Counterexamples kept per check; the failure count is always complete.
pub const MAX_COUNTEREXAMPLES: usize = 8;

/// Largest order for exhaustive labeled-tree enumeration; above it trees are
/// enumerated up to isomorphism.
pub const LABELED_TREE_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub graph: String,
    #[serde(serialize_with = "serialize_sig")]
    pub alpha: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<CheckOutcome>, counterexamples: Vec<Counterexample>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport { suite: suite.to_string(), passed, checks, counterexamples }
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Connected,
    Trees,
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges={}", g.order(), edges.join(","))
}

fn dense_radius(g: &Graph, a: AlphaParam) -> f64 {
    dense_eigenvalues(&g.alpha_matrix(a)).last().copied().unwrap_or(0.0)
}

/// Running summary of one extremal check at one `(n, α)`.
///
/// `slack` is oriented so that negative means the inequality fails; the
/// extremal graph must have `|slack| ≤ TIGHT_TOL` and every other graph
/// `slack > TIGHT_TOL`.
#[derive(Debug, Clone)]
struct Tally {
    graphs: usize,
    extremal: usize,
    failures: usize,
    min_slack: f64,
    min_other_slack: f64,
    max_extremal_slack: f64,
    examples: Vec<Counterexample>,
}

impl Default for Tally {
    fn default() -> Self {
        Tally {
            graphs: 0,
            extremal: 0,
            failures: 0,
            min_slack: f64::INFINITY,
            min_other_slack: f64::INFINITY,
            max_extremal_slack: 0.0,
            examples: Vec::new(),
        }
    }
}

impl Tally {
    fn record(&mut self, check: &str, g: &Graph, alpha: f64, slack: f64, is_extremal: bool) {
        self.graphs += 1;
        self.min_slack = self.min_slack.min(slack);
        let problem = if slack < -TIGHT_TOL {
            Some(format!("inequality fails by {:.3e}", -slack))
        } else if is_extremal {
            self.extremal += 1;
            self.max_extremal_slack = self.max_extremal_slack.max(slack.abs());
            (slack.abs() > TIGHT_TOL).then(|| format!("extremal graph not tight, slack {slack:.3e}"))
        } else {
            self.min_other_slack = self.min_other_slack.min(slack);
            (slack <= TIGHT_TOL).then(|| format!("non-extremal graph attains equality, slack {slack:.3e}"))
        };
        if let Some(detail) = problem {
            self.failures += 1;
            if self.examples.len() < MAX_COUNTEREXAMPLES {
                self.examples.push(Counterexample {
                    check: check.to_string(),
                    graph: describe(g),
                    alpha,
                    detail,
                });
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.extremal += other.extremal;
        self.failures += other.failures;
        self.min_slack = self.min_slack.min(other.min_slack);
        self.min_other_slack = self.min_other_slack.min(other.min_other_slack);
        self.max_extremal_slack = self.max_extremal_slack.max(other.max_extremal_slack);
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
        self
    }

    fn outcome(&self, name: String, extremal_name: &str) -> CheckOutcome {
        let passed = self.failures == 0 && self.extremal > 0;
        let detail = format!(
            "{} graphs, {} {extremal_name}, {} failures, min slack {:.3e}, min non-{extremal_name} slack {:.3e}, max {extremal_name} |slack| {:.3e}",
            self.graphs,
            self.extremal,
            self.failures,
            self.min_slack,
            self.min_other_slack,
            self.max_extremal_slack
        );
        CheckOutcome::new(name, passed, detail)
    }
}

fn merge_tallies(a: Vec<Tally>, b: Vec<Tally>) -> Vec<Tally> {
    a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
}

/// Runs one extremal check over every graph in `graphs`, per `α`.
fn tally_family<I, F>(graphs: I, alphas: &[AlphaParam], check: &str, slack: F) -> Vec<Tally>
where
    I: ParallelIterator<Item = Graph>,
    F: Fn(&Graph, usize) -> (f64, bool) + Sync,
{
    graphs
        .fold(
            || vec![Tally::default(); alphas.len()],
            |mut acc, g| {
                for (i, t) in acc.iter_mut().enumerate() {
                    let (s, extremal) = slack(&g, i);
                    t.record(check, &g, alphas[i].alpha(), s, extremal);
                }
                acc
            },
        )
        .reduce(|| vec![Tally::default(); alphas.len()], merge_tallies)
}

fn finish(suite: &str, per_check: Vec<(String, Tally)>, extremal_name: &str) -> SuiteReport {
    let mut checks = Vec::new();
    let mut examples = Vec::new();
    for (name, tally) in per_check {
        checks.push(tally.outcome(name, extremal_name));
        examples.extend(tally.examples);
    }
    SuiteReport::new(suite, checks, examples)
}

/// Every tree of order `n ≤ n_max` satisfies `ρ(A_α(T)) ≤ star_bound(α, n)`,
/// with equality only for the star. Orders up to 8 enumerate all labeled
/// trees; orders 9 and 10 enumerate isomorphism classes.
pub fn verify_star_extremal(n_max: usize, alphas: &[AlphaParam]) -> Result<SuiteReport> {
    if !(2..=10).contains(&n_max) {
        return Err(Error::InvalidArgument(format!("tree order limit must be in 2..=10, got {n_max}")));
    }
    let mut per_check = Vec::new();
    for n in 2..=n_max {
        let bounds: Vec<f64> = alphas.iter().map(|&a| star_bound(a, n)).collect::<Result<_>>()?;
        let slack = |g: &Graph, i: usize| (bounds[i] - dense_radius(g, alphas[i]), g.is_star());
        let tallies = if n <= LABELED_TREE_MAX_N {
            let count = labeled_tree_count(n);
            let trees = (0..count).into_par_iter().map(|i| labeled_tree(n, i).expect("index below count"));
            tally_family(trees, alphas, "star_extremal", slack)
        } else {
            tally_family(nonisomorphic_trees(n)?.into_par_iter(), alphas, "star_extremal", slack)
        };
        for (a, t) in alphas.iter().zip(tallies) {
            per_check.push((format!("trees of order {n}, alpha {a}"), t));
        }
    }
    Ok(finish("t2", per_check, "star"))
}

/// Every connected graph (or tree) of order `n ≤ n_max` satisfies
/// `ρ(A_α(G)) ≥ ρ(A_α(P_n))`, with equality only for the path.
pub fn verify_path_minimal(n_max: usize, alphas: &[AlphaParam], family: GraphFamily) -> Result<SuiteReport> {
    let cap = match family {
        GraphFamily::Connected => 7,
        GraphFamily::Trees => 10,
    };
    if !(2..=cap).contains(&n_max) {
        return Err(Error::InvalidArgument(format!("order limit must be in 2..={cap}, got {n_max}")));
    }
    let mut per_check = Vec::new();
    for n in 2..=n_max {
        let path = Graph::path(n)?;
        let floor: Vec<f64> = alphas.iter().map(|&a| dense_radius(&path, a)).collect();
        let slack = |g: &Graph, i: usize| (dense_radius(g, alphas[i]) - floor[i], g.is_path());
        let tallies = match family {
            GraphFamily::Connected => {
                let pairs = complete_pairs(n);
                let masks = connected_edge_masks(n)?;
                let graphs = masks.into_par_iter().map(|m| graph_from_mask(n, &pairs, m));
                tally_family(graphs, alphas, "path_minimal", slack)
            }
            GraphFamily::Trees if n <= LABELED_TREE_MAX_N => {
                let trees = (0..labeled_tree_count(n))
                    .into_par_iter()
                    .map(|i| labeled_tree(n, i).expect("index below count"));
                tally_family(trees, alphas, "path_minimal", slack)
            }
            GraphFamily::Trees => tally_family(nonisomorphic_trees(n)?.into_par_iter(), alphas, "path_minimal", slack),
        };
        let kind = match family {
            GraphFamily::Connected => "connected graphs",
            GraphFamily::Trees => "trees",
        };
        for (a, t) in alphas.iter().zip(tallies) {
            per_check.push((format!("{kind} of order {n}, alpha {a}"), t));
        }
    }
    let suite = match family {
        GraphFamily::Connected => "t3",
        GraphFamily::Trees => "t3-trees",
    };
    Ok(finish(suite, per_check, "path"))
}

/// `ρ(A_α(B(Δ−1, k)))` for `k = 2..=k_max` against `αΔ + 2(1−α)√(Δ−1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxDegreeTightness {
    #[serde(serialize_with = "serialize_sig")]
    pub alpha: f64,
    pub delta: usize,
    #[serde(serialize_with = "serialize_sig")]
    pub bound: f64,
    #[serde(serialize_with = "crate::format::serialize_sig_vec")]
    pub radii: Vec<f64>,
    #[serde(serialize_with = "crate::format::serialize_sig_vec")]
    pub gaps: Vec<f64>,
    pub strictly_below: bool,
    pub increasing: bool,
    pub gap_decreasing: bool,
}

impl MaxDegreeTightness {
    /// `gap(k_max) / gap(3)`.
    pub fn gap_ratio(&self) -> f64 {
        self.gaps[self.gaps.len() - 1] / self.gaps[1]
    }

    pub fn passed(&self) -> bool {
        self.strictly_below && self.increasing && self.gap_decreasing
    }
}

/// Strictness for `α < 1` means a gap above `1e−12`; at `α = 1` every Bethe
/// tree attains the bound and only `≤` and monotonicity are required.
pub fn verify_max_degree_tightness(a: AlphaParam, delta: usize, k_max: usize) -> Result<MaxDegreeTightness> {
    if delta < 3 || k_max < 3 {
        return Err(Error::InvalidArgument(format!("need delta >= 3 and k_max >= 3, got {delta}, {k_max}")));
    }
    let bound = max_degree_tree_bound(a, delta)?;
    let radii: Vec<f64> = (2..=k_max)
        .map(|k| {
            let spec = GeneralizedBetheSpec::bethe(delta - 1, k)?;
            Ok(spec.spectrum(a).max().expect("nonempty spectrum"))
        })
        .collect::<Result<_>>()?;
    let gaps: Vec<f64> = radii.iter().map(|r| bound - r).collect();
    let strict = a.alpha() < 1.0;
    let strictly_below = if strict {
        gaps.iter().all(|&g| g > 1e-12)
    } else {
        gaps.iter().all(|&g| g >= -TIGHT_TOL)
    };
    let increasing = radii.windows(2).all(|w| if strict { w[1] > w[0] } else { w[1] >= w[0] - TIGHT_TOL });
    let gap_decreasing = gaps.windows(2).all(|w| if strict { w[1] < w[0] } else { w[1] <= w[0] + TIGHT_TOL });
    Ok(MaxDegreeTightness { alpha: a.alpha(), delta, bound, radii, gaps, strictly_below, increasing, gap_decreasing })
}

/// [`verify_max_degree_tightness`] for every `(Δ, α)` pair.
pub fn verify_max_degree_suite(deltas: &[usize], alphas: &[AlphaParam], k_max: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for &delta in deltas {
        for &a in alphas {
            let t = verify_max_degree_tightness(a, delta, k_max)?;
            let detail = format!(
                "bound {:.12}, rho(k=2) {:.12}, rho(k={k_max}) {:.12}, gap ratio k={k_max}/k=3 {:.4}, below: {}, increasing: {}, gap decreasing: {}",
                t.bound,
                t.radii[0],
                t.radii[t.radii.len() - 1],
                t.gap_ratio(),
                t.strictly_below,
                t.increasing,
                t.gap_decreasing
            );
            checks.push(CheckOutcome::new(format!("delta {delta}, alpha {a}"), t.passed(), detail));
        }
    }
    Ok(SuiteReport::new("t1", checks, Vec::new()))
}

/// Closed forms `ρ(A(P_n))`, `ρ(Q(P_n))` for `n = 2..=n_max` and the path
/// sandwich on `alphas`.
///
/// Equality is asserted for the upper bound at `α ∈ {0, 1/2, 1}` and the lower
/// bound at `α = 1/2`, for `n ≥ 3` (`P_2` has `Δ = 1`). The upper bound must
/// be strict elsewhere, the lower bound strict for `α < 1/2`; for `α > 1/2`
/// its slack is only reported. Both slacks must reach `1e−6` at
/// `α ∈ {1/4, 3/4}` when `n ≥ 4`.
pub fn verify_path_bounds(n_max: usize, alphas: &[AlphaParam]) -> Result<SuiteReport> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!("path order limit must be >= 2, got {n_max}")));
    }
    let mut checks = Vec::new();
    let mut examples = Vec::new();
    let mut fail = |check: &str, n: usize, alpha: f64, detail: String| {
        if examples.len() < MAX_COUNTEREXAMPLES {
            examples.push(Counterexample { check: check.into(), graph: format!("path:{n}"), alpha, detail });
        }
    };

    let (mut dev_a, mut dev_q) = (0.0f64, 0.0f64);
    for n in 2..=n_max {
        let p = Graph::path(n)?;
        let ra = spectral_radius(&p, AlphaParam::ZERO)?;
        let rq = 2.0 * spectral_radius(&p, AlphaParam::HALF)?;
        dev_a = dev_a.max((ra - path_adjacency_radius(n)).abs());
        dev_q = dev_q.max((rq - path_signless_radius(n)).abs());
    }
    checks.push(CheckOutcome::new("adjacency closed form", dev_a <= TIGHT_TOL, format!("max deviation {dev_a:.3e}")));
    checks.push(CheckOutcome::new("signless closed form", dev_q <= TIGHT_TOL, format!("max deviation {dev_q:.3e}")));

    let (mut sandwich_fail, mut eq_fail, mut strict_fail, mut margin_fail) = (0, 0, 0, 0);
    let mut min_margin = f64::INFINITY;
    let mut min_lower_high = f64::INFINITY;
    for n in 2..=n_max {
        let p = Graph::path(n)?;
        for &a in alphas {
            let alpha = a.alpha();
            let rho = spectral_radius(&p, a)?;
            let (lower, upper) = path_bounds(a, n)?;
            let (up, lo) = (upper - rho, rho - lower);
            if up < -TIGHT_TOL || lo < -TIGHT_TOL {
                sandwich_fail += 1;
                fail("sandwich", n, alpha, format!("upper slack {up:.3e}, lower slack {lo:.3e}"));
            }
            if n < 3 {
                continue;
            }
            let upper_eq = alpha == 0.0 || alpha == 0.5 || alpha == 1.0;
            if upper_eq != (up.abs() <= TIGHT_TOL) {
                let what = if upper_eq { "equality" } else { "strictness" };
                if upper_eq { eq_fail += 1 } else { strict_fail += 1 }
                fail("upper equality pattern", n, alpha, format!("expected {what}, slack {up:.3e}"));
            }
            if alpha == 0.5 && lo.abs() > TIGHT_TOL {
                eq_fail += 1;
                fail("lower equality pattern", n, alpha, format!("expected equality, slack {lo:.3e}"));
            }
            if alpha < 0.5 && lo <= TIGHT_TOL {
                strict_fail += 1;
                fail("lower equality pattern", n, alpha, format!("expected strictness, slack {lo:.3e}"));
            }
            if alpha > 0.5 {
                min_lower_high = min_lower_high.min(lo);
            }
            if n >= 4 && (alpha == 0.25 || alpha == 0.75) {
                let m = up.min(lo);
                min_margin = min_margin.min(m);
                if m < 1e-6 {
                    margin_fail += 1;
                    fail("quarter margins", n, alpha, format!("margin {m:.3e} below 1e-6"));
                }
            }
        }
    }
    checks.push(CheckOutcome::new("sandwich", sandwich_fail == 0, format!("{sandwich_fail} violations")));
    checks.push(CheckOutcome::new("equality where stated", eq_fail == 0, format!("{eq_fail} missing equalities")));
    checks.push(CheckOutcome::new("strict elsewhere", strict_fail == 0, format!("{strict_fail} unexpected equalities")));
    checks.push(CheckOutcome::new(
        "quarter margins",
        margin_fail == 0,
        format!("min margin at alpha 0.25/0.75 for n >= 4: {min_margin:.3e}"),
    ));
    checks.push(CheckOutcome::new(
        "lower slack above one half (reported)",
        true,
        format!("min lower slack for alpha > 1/2: {min_lower_high:.3e}"),
    ));
    Ok(SuiteReport::new("paths", checks, examples))
}

/// Reduction radius of `B(d,k)` within the Bethe bounds for each `d`,
/// `k = 2..=k_max` and `α`, the signless closed form at `α = 1/2`, and
/// `cos(π/(k+1)) − cos(π/k) < 10/k³` for `k = 2..=cos_k_max`.
pub fn verify_bethe_bounds(ds: &[usize], k_max: usize, alphas: &[AlphaParam], cos_k_max: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut examples = Vec::new();
    for &d in ds {
        let (mut fails, mut min_upper, mut min_lower, mut q_dev) = (0, f64::INFINITY, f64::INFINITY, 0.0f64);
        for k in 2..=k_max {
            let spec = GeneralizedBetheSpec::bethe(d, k)?;
            for &a in alphas {
                let rho = spec.spectrum(a).max().expect("nonempty spectrum");
                let (lower, upper) = bethe_bounds(a, d, k)?;
                min_upper = min_upper.min(upper - rho);
                min_lower = min_lower.min(rho - lower);
                if upper - rho < -TIGHT_TOL || rho - lower < -TIGHT_TOL {
                    fails += 1;
                    if examples.len() < MAX_COUNTEREXAMPLES {
                        examples.push(Counterexample {
                            check: "bethe sandwich".into(),
                            graph: format!("bethe:{d}:{k}"),
                            alpha: a.alpha(),
                            detail: format!("rho {rho}, bounds [{lower}, {upper}]"),
                        });
                    }
                }
                if a == AlphaParam::HALF {
                    q_dev = q_dev.max((2.0 * rho - bethe_signless_radius(d, k)).abs());
                }
            }
        }
        checks.push(CheckOutcome::new(
            format!("bethe sandwich d={d}"),
            fails == 0,
            format!("{fails} violations, min upper slack {min_upper:.3e}, min lower slack {min_lower:.3e}"),
        ));
        if alphas.contains(&AlphaParam::HALF) {
            checks.push(CheckOutcome::new(
                format!("signless closed form d={d}"),
                q_dev <= TIGHT_TOL,
                format!("max deviation {q_dev:.3e}"),
            ));
        }
    }
    let bad: Vec<usize> = (2..=cos_k_max).filter(|&k| cos_step(k) >= 10.0 / (k as f64).powi(3)).collect();
    checks.push(CheckOutcome::new(
        format!("cosine step below 10/k^3 for k <= {cos_k_max}"),
        bad.is_empty(),
        format!("{} failing k", bad.len()),
    ));
    Ok(SuiteReport::new("bethe", checks, examples))
}

/// Reduction spectrum against the dense oracle on the built tree.
pub fn verify_reduction(specs: &[GeneralizedBetheSpec], alphas: &[AlphaParam], tol: f64) -> Result<SuiteReport> {
    let rows: Vec<(String, f64, f64, bool)> = specs
        .par_iter()
        .flat_map_iter(|spec| {
            let tree = spec.build_tree();
            alphas.iter().map(move |&a| {
                let reduced = spec.spectrum(a).expand();
                let oracle = dense_eigenvalues(&tree.alpha_matrix(a));
                let dev = if reduced.len() == oracle.len() {
                    reduced.iter().zip(&oracle).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
                } else {
                    f64::INFINITY
                };
                (spec.to_string(), a.alpha(), dev, reduced.len() == spec.order())
            })
        })
        .collect();
    let mut checks = Vec::new();
    let mut examples = Vec::new();
    for (spec, alpha, dev, complete) in rows {
        let passed = complete && dev <= tol;
        if !passed && examples.len() < MAX_COUNTEREXAMPLES {
            examples.push(Counterexample {
                check: "reduction".into(),
                graph: format!("gbethe:{spec}"),
                alpha,
                detail: format!("max deviation {dev:.3e}, multiplicity complete: {complete}"),
            });
        }
        checks.push(CheckOutcome::new(
            format!("gbethe {spec}, alpha {alpha}"),
            passed,
            format!("max deviation {dev:.3e}"),
        ));
    }
    Ok(SuiteReport::new("reduction", checks, examples))
}

/// `|ρ(A(G)) − 2| ≤ 1e−9` for one member of each Smith family.
pub fn verify_smith() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut examples = Vec::new();
    for Fixture { name, graph } in smith_fixtures() {
        let rho = spectral_radius(&graph, AlphaParam::ZERO)?;
        let dev = (rho - 2.0).abs();
        if dev > TIGHT_TOL {
            examples.push(Counterexample {
                check: "smith".into(),
                graph: describe(&graph),
                alpha: 0.0,
                detail: format!("{name}: rho {rho}"),
            });
        }
        checks.push(CheckOutcome::new(name, dev <= TIGHT_TOL, format!("rho {rho:.12}, deviation {dev:.3e}")));
    }
    Ok(SuiteReport::new("smith", checks, examples))
}

/// Sandwich rows on every fixture and `α`, plus the equality patterns:
/// `complement_sum_lower` is tight at every `α` for regular graphs and only at
/// `α = 1/2` otherwise; `max_degree_upper` is tight only at `α = 1` or for
/// regular graphs.
pub fn verify_sandwich(fixtures: &[Fixture], alphas: &[AlphaParam]) -> Result<SuiteReport> {
    let per_fixture: Vec<Result<(CheckOutcome, Vec<Counterexample>)>> = fixtures
        .par_iter()
        .map(|f| {
            let regular = f.graph.is_regular();
            let mut problems = Vec::new();
            let mut min_slack = f64::INFINITY;
            for &a in alphas {
                let alpha = a.alpha();
                let r = sandwich_bounds(&f.graph, &f.name, a)?;
                for b in r.bounds.iter().filter(|b| b.applicable) {
                    min_slack = min_slack.min(b.slack);
                    if b.violated() {
                        problems.push((alpha, format!("{} violated, slack {:.3e}", b.name, b.slack)));
                    }
                }
                let le = r.entry("complement_sum_lower").expect("always present");
                let le_expected = regular || alpha == 0.5;
                if le.tight != le_expected {
                    problems.push((alpha, format!("complement sum tight={} (expected {le_expected}), slack {:.3e}", le.tight, le.slack)));
                }
                let bo = r.entry("max_degree_upper").expect("always present");
                let bo_expected = regular || alpha == 1.0;
                if bo.tight != bo_expected {
                    problems.push((alpha, format!("max degree tight={} (expected {bo_expected}), slack {:.3e}", bo.tight, bo.slack)));
                }
            }
            let examples = problems
                .iter()
                .take(MAX_COUNTEREXAMPLES)
                .map(|(alpha, detail)| Counterexample {
                    check: "sandwich".into(),
                    graph: f.name.clone(),
                    alpha: *alpha,
                    detail: detail.clone(),
                })
                .collect();
            let outcome = CheckOutcome::new(
                f.name.clone(),
                problems.is_empty(),
                format!("{} problems, min slack {min_slack:.3e}, regular: {regular}", problems.len()),
            );
            Ok((outcome, examples))
        })
        .collect();
    let mut checks = Vec::new();
    let mut examples = Vec::new();
    for item in per_fixture {
        let (c, e) = item?;
        checks.push(c);
        examples.extend(e);
    }
    examples.truncate(MAX_COUNTEREXAMPLES);
    Ok(SuiteReport::new("sandwich", checks, examples))
}
