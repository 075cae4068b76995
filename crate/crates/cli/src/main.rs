//! `degdev`: analysis, corpus verification, enumeration, blow-up tables and
//! star sweeps from the command line.
//!
//! Exit status is 0 when nothing was violated, 1 when some check failed and
//! 2 on usage, input or parse errors.

mod args;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;
use degdev_core::bounds::{blowup_limit_demo_limited, evaluate_bounds};
use degdev_core::par::Execution;
use degdev_core::spectral::DEFAULT_TOL;
use degdev_core::verify::{
    check_graphs, exhaustive_check_with, geometric_grid, random_corpus_check, star_sweep, Check, CorpusOptions,
    CorpusRow, CorpusSpec, CorpusSummary, ExhaustiveOptions,
};

use args::{Cli, Command};
use output::Sink;

/// Failure that maps to exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(true)` when no check was violated.
fn run(cli: &Cli) -> CliResult<bool> {
    let execution = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    let mut sink = Sink::open(cli.out.as_deref(), cli.output)?;
    match &cli.command {
        Command::Analyze(source) => {
            let graphs = input::load(source, cli.seed)?;
            let reports = graphs.iter().map(|g| evaluate_bounds(g, tol)).collect::<Result<Vec<_>, _>>()?;
            sink.reports(&reports)?;
            let ratio_ok = reports.iter().all(|r| ratio_within(cli, r.gap_ratio, &format!("n = {}", r.n)));
            Ok(ratio_ok && !reports.iter().any(|r| r.any_fail()))
        }
        Command::Verify(args) => {
            let opts = CorpusOptions {
                checks: checks_or_all(&args.checks),
                tol,
                execution,
                collect_rows: args.rows.is_some(),
            };
            let (summary, rows) = if args.families.is_empty() {
                if args.sizes.is_some() {
                    return Err(UsageError("`--sizes` needs `--families`".into()));
                }
                let graphs = input::load(&args.source, cli.seed)?;
                check_graphs(&graphs, &input::describe(&args.source), &opts)?
            } else {
                if args.source.is_given() {
                    return Err(UsageError("give either an input graph source or `--families`, not both".into()));
                }
                let sizes = args.sizes.clone().ok_or_else(|| UsageError("`--families` needs `--sizes`".into()))?;
                let spec = CorpusSpec { families: args.families.clone(), sizes: sizes.0, count: args.count, seed: cli.seed };
                random_corpus_check(&spec, &opts)?
            };
            if let Some(path) = &args.rows {
                std::fs::write(path, CorpusRow::to_csv(&rows))
                    .map_err(|e| UsageError(format!("cannot write `{}`: {e}", path.display())))?;
            }
            sink.summary(&summary)?;
            Ok(summary_ok(cli, &summary))
        }
        Command::Enumerate(args) => {
            let opts = ExhaustiveOptions {
                n_max: args.n_max,
                n_min: args.n_min,
                allow_large: args.allow_large,
                checks: checks_or_all(&args.checks),
                tol: cli.tol.unwrap_or(1e-8),
                execution,
            };
            let summary = exhaustive_check_with(&opts)?;
            sink.summary(&summary)?;
            Ok(summary_ok(cli, &summary))
        }
        Command::Blowup(args) => {
            let graphs = input::load(&args.source, cli.seed)?;
            let [g] = graphs.as_slice() else {
                return Err(UsageError(format!("blowup takes exactly one graph, got {}", graphs.len())));
            };
            let rows = blowup_limit_demo_limited(g, &args.factors, tol, args.max_vertices)?;
            sink.blowup(&rows)?;
            let ratio_ok = rows.iter().all(|r| ratio_within(cli, r.gap_ratio, &format!("t = {}", r.t)));
            Ok(ratio_ok && rows.iter().all(|r| r.rho_scaled_check))
        }
        Command::StarSweep(args) => {
            let ns = match args.grid {
                Some((from, to, points)) => geometric_grid(from, to, points),
                None => args.ns.clone(),
            };
            let rows = star_sweep(&ns)?;
            sink.stars(&rows)?;
            let ratio_ok = rows.iter().all(|r| ratio_within(cli, r.ratio, &format!("star n = {}", r.n)));
            Ok(ratio_ok && rows.iter().all(|r| r.cross_check != Some(false) && r.ratio < std::f64::consts::FRAC_1_SQRT_2))
        }
    }
}

fn ratio_within(cli: &Cli, ratio: f64, what: &str) -> bool {
    match cli.max_ratio {
        Some(limit) if ratio > limit => {
            eprintln!("violation: {what}: gap ratio {ratio} exceeds --max-ratio {limit}");
            false
        }
        _ => true,
    }
}

fn summary_ok(cli: &Cli, summary: &CorpusSummary) -> bool {
    for v in &summary.violations {
        eprintln!("violation: {} {}: {}", v.failing_check, v.graph6, v.details);
    }
    let witness = summary.max_gap_ratio_witness.as_deref().unwrap_or("-");
    let ratio_ok = ratio_within(cli, summary.max_gap_ratio, &format!("graph {witness}"));
    ratio_ok && summary.is_clean()
}

fn checks_or_all(checks: &[Check]) -> Vec<Check> {
    if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        checks.to_vec()
    }
}
