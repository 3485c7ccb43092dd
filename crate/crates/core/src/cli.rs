//! Command-line front end. [`run`] does all the work and returns the text to
//! print plus an exit code, so the binary is a thin wrapper.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bethe::GeneralizedBetheSpec;
use crate::bounds::fixtures::standard_fixtures;
use crate::bounds::{
    decile_alphas, quartile_alphas, sandwich_bounds, verify_bethe_bounds, verify_max_degree_suite,
    verify_path_bounds, verify_path_minimal, verify_sandwich, verify_smith, verify_star_extremal,
    BoundsReport, GraphFamily, SuiteReport,
};
use crate::eigen::{dense_eigenvalues, perron, DEFAULT_BISECTION_TOL, DEFAULT_PERRON_TOL};
use crate::error::{Error, Result};
use crate::format::{fmt_sig, serialize_sig, serialize_sig_opt, serialize_sig_vec};
use crate::graph::{read_edge_list, AlphaParam, Graph};
use crate::spectrum::Spectrum;

/// Environment variable capping the worker pool; `0` or unset means automatic.
pub const THREADS_ENV: &str = "ALPHA_SPECTRA_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "alpha-spectra", version, about = "A_alpha spectra of graphs and spectral radius bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full A_alpha spectrum of a builtin graph or an edge-list file.
    Spectrum {
        /// path:N, star:N, cycle:N, complete:N, Y:N, F7, F8, F9, K14, bethe:D:K, or a file
        source: String,
        #[command(flatten)]
        alpha: AlphaArgs,
        /// Cross-check reduction spectra against the dense oracle.
        #[arg(long)]
        oracle_check: bool,
        /// Bisection tolerance for reduction spectra.
        #[arg(long, default_value_t = DEFAULT_BISECTION_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Spectrum of the Bethe tree B(d, k) via the tridiagonal reduction.
    Bethe {
        d: usize,
        k: usize,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, default_value_t = DEFAULT_BISECTION_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Spectrum of a generalized Bethe tree given by its level degrees, leaves first.
    Gbethe {
        /// Comma-separated degrees such as 1,3,3,4,3
        degrees: String,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, default_value_t = DEFAULT_BISECTION_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Every applicable bound on the spectral radius, with slacks.
    Bounds {
        source: String,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Perron root and vector of a connected graph.
    Perron {
        source: String,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[arg(long, default_value_t = DEFAULT_PERRON_TOL)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        suite: String,
        /// Override the suite's alpha grid.
        #[arg(long, value_parser = parse_alphas)]
        alpha: Option<AlphaList>,
        /// Largest graph order (t2, t3, paths).
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest number of levels (t1, bethe).
        #[arg(long)]
        k_max: Option<usize>,
        /// Graph family for t3.
        #[arg(long, value_enum, default_value_t = Family::Connected)]
        family: Family,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Connected,
    Trees,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaList(pub Vec<AlphaParam>);

#[derive(Debug, Args)]
pub struct AlphaArgs {
    /// A value in [0,1] or a comma-separated list.
    #[arg(long, value_parser = parse_alphas)]
    pub alpha: AlphaList,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.csv {
            Format::Csv
        } else {
            Format::Json
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

pub fn parse_alphas(s: &str) -> std::result::Result<AlphaList, String> {
    let values = s
        .split(',')
        .map(|t| {
            let x: f64 = t.trim().parse().map_err(|e| format!("`{}`: {e}", t.trim()))?;
            AlphaParam::new(x).map_err(|e| e.to_string())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(AlphaList(values))
}

/// A graph named on the command line.
#[derive(Debug, Clone)]
pub enum Source {
    Graph { name: String, graph: Graph },
    Bethe { name: String, spec: GeneralizedBetheSpec },
}

impl Source {
    pub fn name(&self) -> &str {
        match self {
            Source::Graph { name, .. } | Source::Bethe { name, .. } => name,
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            Source::Graph { graph, .. } => graph.clone(),
            Source::Bethe { spec, .. } => spec.build_tree(),
        }
    }
}

fn parse_count(name: &str, arg: &str) -> Result<usize> {
    arg.parse().map_err(|e| Error::InvalidArgument(format!("`{name}`: bad number `{arg}`: {e}")))
}

/// Resolves a builtin name or, failing that, reads an edge-list file.
pub fn parse_source(s: &str) -> Result<Source> {
    let graph = |graph: Graph| Ok(Source::Graph { name: s.to_string(), graph });
    match s {
        "F7" => return graph(Graph::smith_f7()),
        "F8" => return graph(Graph::smith_f8()),
        "F9" => return graph(Graph::smith_f9()),
        "K14" => return graph(Graph::smith_k14()),
        _ => {}
    }
    if let Some((kind, rest)) = s.split_once(':') {
        match kind {
            "path" => return graph(Graph::path(parse_count(s, rest)?)?),
            "star" => return graph(Graph::star(parse_count(s, rest)?)?),
            "cycle" => return graph(Graph::cycle(parse_count(s, rest)?)?),
            "complete" => return graph(Graph::complete(parse_count(s, rest)?)?),
            "Y" => return graph(Graph::smith_y(parse_count(s, rest)?)?),
            "bethe" => {
                let (d, k) = rest
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidArgument(format!("`{s}`: expected bethe:D:K")))?;
                let spec = GeneralizedBetheSpec::bethe(parse_count(s, d)?, parse_count(s, k)?)?;
                return Ok(Source::Bethe { name: s.to_string(), spec });
            }
            "gbethe" => {
                let spec = GeneralizedBetheSpec::from_str(rest)?;
                return Ok(Source::Bethe { name: s.to_string(), spec });
            }
            _ => {}
        }
    }
    let path = Path::new(s);
    if !path.exists() {
        return Err(Error::InvalidArgument(format!("`{s}` is neither a builtin graph nor a readable file")));
    }
    graph(read_edge_list(path)?)
}

#[derive(Debug, Clone, Serialize)]
struct SpectrumRecord {
    graph: String,
    n: usize,
    #[serde(serialize_with = "serialize_sig")]
    alpha: f64,
    method: &'static str,
    spectrum: Spectrum,
    #[serde(skip_serializing_if = "Option::is_none")]
    merged: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_sig_opt")]
    deviation: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
struct PerronRecord {
    graph: String,
    #[serde(serialize_with = "serialize_sig")]
    alpha: f64,
    #[serde(serialize_with = "serialize_sig")]
    rho: f64,
    #[serde(serialize_with = "serialize_sig_vec")]
    vector: Vec<f64>,
    iterations: usize,
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

fn max_deviation(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn bethe_record(name: &str, spec: &GeneralizedBetheSpec, a: AlphaParam, check: bool, tol: f64) -> Result<SpectrumRecord> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let detailed = spec.spectrum_detailed_with_tol(a, tol);
    let deviation = check.then(|| {
        let oracle = dense_eigenvalues(&spec.build_tree().alpha_matrix(a));
        max_deviation(&detailed.spectrum.expand(), &oracle)
    });
    Ok(SpectrumRecord {
        graph: name.to_string(),
        n: spec.order(),
        alpha: a.alpha(),
        method: "reduction",
        spectrum: detailed.spectrum,
        merged: Some(detailed.merges),
        deviation,
    })
}

fn dense_record(name: &str, g: &Graph, a: AlphaParam) -> SpectrumRecord {
    let values = dense_eigenvalues(&g.alpha_matrix(a));
    SpectrumRecord {
        graph: name.to_string(),
        n: g.order(),
        alpha: a.alpha(),
        method: "dense",
        spectrum: Spectrum::from_eigenvalues(&values),
        merged: None,
        deviation: None,
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Io(e.to_string()))
}

fn to_csv(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| Error::Io(e.to_string()))?;
    for row in rows {
        w.write_record(&row).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

fn render_spectra(records: &[SpectrumRecord], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&records),
        Format::Csv => {
            let rows = records
                .iter()
                .flat_map(|r| {
                    r.spectrum.pairs().iter().map(move |&(lambda, mult)| {
                        vec![r.graph.clone(), fmt_sig(r.alpha), fmt_sig(lambda), mult.to_string()]
                    })
                })
                .collect();
            to_csv(&["graph", "alpha", "lambda", "mult"], rows)
        }
    }
}

fn render_bounds(reports: &[BoundsReport], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&reports),
        Format::Csv => {
            let rows = reports
                .iter()
                .flat_map(|r| {
                    r.bounds.iter().map(move |b| {
                        vec![
                            r.graph.clone(),
                            fmt_sig(r.alpha),
                            fmt_sig(r.rho),
                            b.name.clone(),
                            match b.side {
                                crate::bounds::Side::Upper => "upper".to_string(),
                                crate::bounds::Side::Lower => "lower".to_string(),
                            },
                            fmt_sig(b.value),
                            fmt_sig(b.slack),
                            b.applicable.to_string(),
                            b.tight.to_string(),
                        ]
                    })
                })
                .collect();
            to_csv(&["graph", "alpha", "rho", "bound", "side", "value", "slack", "applicable", "tight"], rows)
        }
    }
}

fn render_suite(report: &SuiteReport, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let rows = report
                .checks
                .iter()
                .map(|c| vec![report.suite.clone(), c.name.clone(), c.passed.to_string(), c.detail.clone()])
                .collect();
            to_csv(&["suite", "check", "passed", "detail"], rows)
        }
    }
}

/// Human-readable suite summary, counterexamples included on failure.
pub fn suite_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{tag}] {}: {}\n", c.name, c.detail));
    }
    if !report.passed {
        for ce in &report.counterexamples {
            out.push_str(&format!(
                "counterexample ({}) alpha {}: {} [{}]\n",
                ce.check,
                fmt_sig(ce.alpha),
                ce.detail,
                ce.graph
            ));
        }
    }
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    out.push_str(&format!("suite {}: {verdict} ({} checks, {failed} failed)\n", report.suite, report.checks.len()));
    out
}

fn path_grid() -> Vec<AlphaParam> {
    let mut grid = decile_alphas();
    grid.extend([0.25, 0.75].map(|x| AlphaParam::new(x).expect("in range")));
    grid.sort_by(|a, b| a.alpha().total_cmp(&b.alpha()));
    grid
}

/// Runs a named suite with the given limits; `None` picks the defaults.
pub fn run_suite(
    suite: &str,
    alphas: Option<&[AlphaParam]>,
    max_n: Option<usize>,
    k_max: Option<usize>,
    family: Family,
) -> Result<SuiteReport> {
    let grid = |default: Vec<AlphaParam>| alphas.map(<[AlphaParam]>::to_vec).unwrap_or(default);
    match suite {
        "t1" => {
            let default = [0.0, 0.3, 0.5, 0.8, 1.0].map(|x| AlphaParam::new(x).expect("in range")).to_vec();
            verify_max_degree_suite(&[3, 4, 5], &grid(default), k_max.unwrap_or(15))
        }
        "t2" => verify_star_extremal(max_n.unwrap_or(8), &grid(quartile_alphas())),
        "t3" => {
            let family = match family {
                Family::Connected => GraphFamily::Connected,
                Family::Trees => GraphFamily::Trees,
            };
            verify_path_minimal(max_n.unwrap_or(6), &grid(quartile_alphas()), family)
        }
        "paths" => verify_path_bounds(max_n.unwrap_or(50), &grid(path_grid())),
        "bethe" => verify_bethe_bounds(&[2, 3, 4], k_max.unwrap_or(12), &grid(decile_alphas()), 10_000),
        "smith" => verify_smith(),
        "sandwich" => verify_sandwich(&standard_fixtures(), &grid(decile_alphas())),
        other => Err(Error::InvalidArgument(format!(
            "unknown suite `{other}` (expected t1, t2, t3, paths, bethe, smith or sandwich)"
        ))),
    }
}

/// Executes a parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let ok = |text| Ok(Outcome { text, exit_code: EXIT_OK });
    match &cli.command {
        Command::Spectrum { source, alpha, oracle_check, tol, output } => {
            let source = parse_source(source)?;
            let records = alpha
                .alpha
                .0
                .iter()
                .map(|&a| match &source {
                    Source::Bethe { name, spec } => bethe_record(name, spec, a, *oracle_check, *tol),
                    Source::Graph { name, graph } => Ok(dense_record(name, graph, a)),
                })
                .collect::<Result<Vec<_>>>()?;
            ok(render_spectra(&records, output.format())?)
        }
        Command::Bethe { d, k, alpha, oracle_check, tol, output } => {
            let spec = GeneralizedBetheSpec::bethe(*d, *k)?;
            let name = format!("bethe:{d}:{k}");
            let records = alpha
                .alpha
                .0
                .iter()
                .map(|&a| bethe_record(&name, &spec, a, *oracle_check, *tol))
                .collect::<Result<Vec<_>>>()?;
            ok(render_spectra(&records, output.format())?)
        }
        Command::Gbethe { degrees, alpha, oracle_check, tol, output } => {
            let spec = GeneralizedBetheSpec::from_str(degrees)?;
            let name = format!("gbethe:{spec}");
            let records = alpha
                .alpha
                .0
                .iter()
                .map(|&a| bethe_record(&name, &spec, a, *oracle_check, *tol))
                .collect::<Result<Vec<_>>>()?;
            ok(render_spectra(&records, output.format())?)
        }
        Command::Bounds { source, alpha, output } => {
            let source = parse_source(source)?;
            let g = source.graph();
            let reports = alpha
                .alpha
                .0
                .iter()
                .map(|&a| sandwich_bounds(&g, source.name(), a))
                .collect::<Result<Vec<_>>>()?;
            ok(render_bounds(&reports, output.format())?)
        }
        Command::Perron { source, alpha, tol, output } => {
            let source = parse_source(source)?;
            let g = source.graph();
            if !g.is_connected() {
                return Err(Error::InvalidGraph(format!("`{}` is disconnected; the Perron vector is not unique", source.name())));
            }
            let records = alpha
                .alpha
                .0
                .iter()
                .map(|&a| {
                    let p = perron(&g.alpha_matrix(a), *tol)?;
                    Ok(PerronRecord {
                        graph: source.name().to_string(),
                        alpha: a.alpha(),
                        rho: p.rho,
                        vector: p.vector,
                        iterations: p.iterations,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            match output.format() {
                Format::Json => ok(to_json(&records)?),
                Format::Csv => {
                    let rows = records
                        .iter()
                        .flat_map(|r| {
                            r.vector.iter().enumerate().map(move |(i, x)| {
                                vec![r.graph.clone(), fmt_sig(r.alpha), fmt_sig(r.rho), i.to_string(), fmt_sig(*x)]
                            })
                        })
                        .collect();
                    ok(to_csv(&["graph", "alpha", "rho", "vertex", "entry"], rows)?)
                }
            }
        }
        Command::Verify { suite, alpha, max_n, k_max, family, output } => {
            let report = run_suite(suite, alpha.as_ref().map(|a| a.0.as_slice()), *max_n, *k_max, *family)?;
            let text = if output.json || output.csv {
                render_suite(&report, output.format())?
            } else {
                suite_text(&report)
            };
            let exit_code = if report.passed { EXIT_OK } else { EXIT_VERIFY_FAILED };
            Ok(Outcome { text, exit_code })
        }
    }
}

/// Where a command's output goes.
pub fn output_path(cli: &Cli) -> Option<&Path> {
    let output = match &cli.command {
        Command::Spectrum { output, .. }
        | Command::Bethe { output, .. }
        | Command::Gbethe { output, .. }
        | Command::Bounds { output, .. }
        | Command::Perron { output, .. }
        | Command::Verify { output, .. } => output,
    };
    output.out.as_deref()
}

/// Reads [`THREADS_ENV`]; `Ok(None)` when unset or zero.
pub fn thread_limit() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|e| Error::InvalidArgument(format!("{THREADS_ENV}=`{v}`: {e}")))?;
            Ok((n > 0).then_some(n))
        }
    }
}
