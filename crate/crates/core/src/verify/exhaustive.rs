use std::time::Instant;

use log::warn;

use super::{check_graph, Check, CorpusSummary, Partial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{map_ordered, Execution};

pub const EXHAUSTIVE_LIMIT: usize = 7;
/// Reachable only with `allow_large`.
pub const EXHAUSTIVE_HARD_LIMIT: usize = 8;

const CHUNK: u64 = 1 << 13;

#[derive(Clone, Debug, PartialEq)]
pub struct ExhaustiveOptions {
    pub n_max: usize,
    /// Smallest vertex count enumerated; defaults to `n_max`.
    pub n_min: Option<usize>,
    pub allow_large: bool,
    pub checks: Vec<Check>,
    pub tol: f64,
    pub execution: Execution,
}

impl ExhaustiveOptions {
    pub fn new(n_max: usize) -> Self {
        ExhaustiveOptions {
            n_max,
            n_min: None,
            allow_large: false,
            checks: Check::ALL.to_vec(),
            tol: 1e-8,
            execution: Execution::default(),
        }
    }
}

/// Runs `checks` on every labeled graph on `n_max` vertices
/// (`2^(n(n-1)/2)` graphs, one per edge subset).
pub fn exhaustive_check(n_max: usize, checks: &[Check]) -> Result<CorpusSummary> {
    exhaustive_check_with(&ExhaustiveOptions { checks: checks.to_vec(), ..ExhaustiveOptions::new(n_max) })
}

pub fn exhaustive_check_with(opts: &ExhaustiveOptions) -> Result<CorpusSummary> {
    let n_min = opts.n_min.unwrap_or(opts.n_max);
    if opts.n_max == 0 || n_min == 0 || n_min > opts.n_max {
        return Err(Error::param(format!("need 1 <= n_min <= n_max, got {n_min}..={}", opts.n_max)));
    }
    let limit = if opts.allow_large { EXHAUSTIVE_HARD_LIMIT } else { EXHAUSTIVE_LIMIT };
    if opts.n_max > limit {
        return Err(Error::TooLarge { requested: opts.n_max, limit });
    }
    if opts.n_max > EXHAUSTIVE_LIMIT {
        warn!("enumerating {} labeled graphs on {} vertices", 1u64 << (opts.n_max * (opts.n_max - 1) / 2), opts.n_max);
    }

    let started = Instant::now();
    let mut tasks = Vec::new();
    for n in n_min..=opts.n_max {
        let total = 1u64 << (n * (n - 1) / 2);
        tasks.extend((0..total).step_by(CHUNK as usize).map(|start| (n, start, (start + CHUNK).min(total))));
    }

    let parts = map_ordered(opts.execution, &tasks, |&(n, start, end)| -> Result<Partial> {
        let mut part = Partial::default();
        for mask in start..end {
            let g = Graph::from_upper_mask(n, mask)?;
            let outcome = check_graph(&g, &opts.checks, opts.tol)?;
            part.record(&g, outcome);
        }
        Ok(part)
    });
    let mut merged = Partial::default();
    for part in parts {
        merged = merged.merge(part?);
    }
    let id = if n_min == opts.n_max {
        format!("exhaustive:n={}", opts.n_max)
    } else {
        format!("exhaustive:n={n_min}..={}", opts.n_max)
    };
    Ok(merged.finish(id, &opts.checks, started.elapsed().as_secs_f64()))
}
