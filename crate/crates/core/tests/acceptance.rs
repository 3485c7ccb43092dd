//! Exit gate: one line per acceptance criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use alpha_spectra::bounds::fixtures::standard_fixtures;
use alpha_spectra::bounds::{
    decile_alphas, quartile_alphas, verify_bethe_bounds, verify_max_degree_tightness,
    verify_path_bounds, verify_path_minimal, verify_sandwich, verify_smith, verify_star_extremal,
    GraphFamily, SuiteReport,
};
use alpha_spectra::eigen::{dense_eigenvalues, perron, DEFAULT_PERRON_TOL};
use alpha_spectra::{AlphaParam, GeneralizedBetheSpec, Graph, Result};

struct Verdict {
    passed: bool,
    detail: String,
}

fn from_suite(report: &SuiteReport) -> Verdict {
    let failed: Vec<String> = report.failed_checks().map(|c| format!("{} ({})", c.name, c.detail)).collect();
    let mut detail = format!("{} checks, {} failed", report.checks.len(), failed.len());
    if !failed.is_empty() {
        detail.push_str(&format!("; first failure: {}", failed[0]));
    }
    if let Some(ce) = report.counterexamples.first() {
        detail.push_str(&format!("; counterexample at alpha {}: {} [{}]", ce.alpha, ce.detail, ce.graph));
    }
    Verdict { passed: report.passed, detail }
}

fn grid(values: &[f64]) -> Vec<AlphaParam> {
    values.iter().map(|&x| AlphaParam::new(x).unwrap()).collect()
}

fn reduction_equivalence() -> Result<Verdict> {
    let mut specs: Vec<GeneralizedBetheSpec> = vec!["1,3,3,4,3".parse()?, "1,4,4,3".parse()?, "1,2,3,2".parse()?];
    for d in 2..=6 {
        specs.push(GeneralizedBetheSpec::from_degrees(&[1, d])?);
    }
    let mut worst: f64 = 0.0;
    let mut complete = true;
    for spec in &specs {
        let tree = spec.build_tree();
        for a in quartile_alphas() {
            let reduced = spec.spectrum(a).expand();
            let oracle = dense_eigenvalues(&tree.alpha_matrix(a));
            complete &= reduced.len() == oracle.len();
            for (x, y) in reduced.iter().zip(&oracle) {
                worst = worst.max((x - y).abs());
            }
        }
    }
    Ok(Verdict {
        passed: complete && worst <= 1e-8,
        detail: format!("{} specs x 5 alphas, max deviation {worst:.3e}", specs.len()),
    })
}

fn max_degree_tightness() -> Result<Verdict> {
    let mut failures = Vec::new();
    let mut worst_ratio: f64 = 0.0;
    for delta in [3, 4, 5] {
        for a in grid(&[0.0, 0.3, 0.5, 0.8]) {
            let t = verify_max_degree_tightness(a, delta, 15)?;
            let ratio = t.gap_ratio();
            worst_ratio = worst_ratio.max(ratio);
            if !t.passed() || ratio >= 0.25 {
                failures.push(format!("delta {delta} alpha {a}: ratio {ratio:.4}"));
            }
        }
    }
    Ok(Verdict {
        passed: failures.is_empty(),
        detail: format!("12 (delta, alpha) pairs, k = 2..15, largest gap ratio {worst_ratio:.4}; {failures:?}"),
    })
}

fn star_extremal() -> Result<Verdict> {
    Ok(from_suite(&verify_star_extremal(8, &quartile_alphas())?))
}

fn path_minimal() -> Result<Verdict> {
    Ok(from_suite(&verify_path_minimal(6, &quartile_alphas(), GraphFamily::Connected)?))
}

fn path_closed_forms() -> Result<Verdict> {
    let mut alphas = decile_alphas();
    alphas.extend(grid(&[0.25, 0.75]));
    alphas.sort_by(|a, b| a.alpha().total_cmp(&b.alpha()));
    Ok(from_suite(&verify_path_bounds(50, &alphas)?))
}

fn smith() -> Result<Verdict> {
    Ok(from_suite(&verify_smith()?))
}

fn sandwich() -> Result<Verdict> {
    Ok(from_suite(&verify_sandwich(&standard_fixtures(), &decile_alphas())?))
}

fn perron_monotonicity() -> Result<Verdict> {
    let mut worst_step = f64::INFINITY;
    let mut worst_mid: f64 = 0.0;
    for n in 4..=30 {
        let path = Graph::path(n)?;
        for a in grid(&[0.0, 0.3, 0.7, 0.9]) {
            let x = perron(&path.alpha_matrix(a), DEFAULT_PERRON_TOL)?.vector;
            for i in 0..n.div_ceil(2) - 1 {
                worst_step = worst_step.min(x[i + 1] - x[i]);
            }
            if n % 2 == 0 {
                worst_mid = worst_mid.max((x[n / 2 - 1] - x[n / 2]).abs());
            }
        }
    }
    Ok(Verdict {
        passed: worst_step > 1e-12 && worst_mid <= 1e-10,
        detail: format!("smallest increment {worst_step:.3e}, largest middle gap {worst_mid:.3e}"),
    })
}

fn bethe_bounds() -> Result<Verdict> {
    Ok(from_suite(&verify_bethe_bounds(&[2, 3, 4], 12, &decile_alphas(), 10_000)?))
}

type Criterion = (u32, &'static str, Duration, fn() -> Result<Verdict>);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "reduction matches dense oracle", Duration::from_secs(30), reduction_equivalence),
        (2, "max-degree tree bound tight on Bethe trees", Duration::from_secs(10), max_degree_tightness),
        (3, "star maximizes radius among trees (n <= 8)", Duration::from_secs(120), star_extremal),
        (4, "path minimizes radius among connected graphs (n <= 6)", Duration::from_secs(120), path_minimal),
        (5, "path closed forms and sandwich", Duration::MAX, path_closed_forms),
        (6, "Smith graphs have adjacency radius 2", Duration::MAX, smith),
        (7, "sandwich bounds on fixtures", Duration::MAX, sandwich),
        (8, "path Perron vectors increase to the middle", Duration::MAX, perron_monotonicity),
        (9, "Bethe tree bounds", Duration::MAX, bethe_bounds),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let verdict = run().unwrap_or_else(|e| Verdict { passed: false, detail: format!("error: {e}") });
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let passed = verdict.passed && in_time;
        if !passed {
            failed += 1;
        }
        let tag = if passed { "PASS" } else { "FAIL" };
        let time_note = if in_time { String::new() } else { format!(", over the {budget:?} budget") };
        println!("[{tag}] criterion {id}: {name}: {} ({:.2?}{time_note})", verdict.detail, elapsed);
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
