//! Corpus harnesses: exhaustive enumeration, seeded random corpora and the
//! star tightness sweep.
//!
//! Every harness runs the same per-graph [`Check`]s. Any failure of a check is
//! recorded as a [`Violation`] carrying the graph6 string of the offending
//! graph; since every check encodes a proven statement, a violation points at
//! an implementation bug.

mod corpus;
mod exhaustive;
mod star;

pub use corpus::{check_graphs, random_corpus_check, CorpusOptions, CorpusRow, CorpusSpec, FamilyTemplate};
pub use exhaustive::{exhaustive_check, exhaustive_check_with, ExhaustiveOptions, EXHAUSTIVE_HARD_LIMIT, EXHAUSTIVE_LIMIT};
pub use star::{geometric_grid, star_sweep, star_sweep_with, StarRow, STAR_CROSS_CHECK_LIMIT};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    evaluate_bounds_with, intermediate_rowsum_check_with, per_vertex_case_decomposition_with, BoundReport, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{degree_stats, Graph};
use crate::spectral::{certified_interval, lemma_spot_check, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `(rho_lo - 2m/n)^2 <= s/2` exactly.
    Theorem,
    /// `rho - 2m/n <= 1 + sqrt(s/2)` up to interval width.
    PreBlowup,
    /// `max_u r_u(A^2 - (d-1)A) <= d + s/2` exactly.
    RowSum,
    /// `sum_{W_{>=d}} (d(v) - 2m/n) = s/2` exactly.
    HalfDeviation,
    /// `f(rho) <= max_u r_u(f(A))` for a fixed set of polynomials.
    Lemma,
    /// `rho_lo >= 2m/n` exactly.
    CollatzSinogowitz,
    /// `sqrt(s/2) < sqrt(2s/3) < sqrt(9s/10) < sqrt(s)` when `s > 0`.
    BoundChain,
    /// Every displayed line of the per-vertex case chain, for every vertex.
    CaseChain,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem,
        Check::PreBlowup,
        Check::RowSum,
        Check::HalfDeviation,
        Check::Lemma,
        Check::CollatzSinogowitz,
        Check::BoundChain,
        Check::CaseChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::PreBlowup => "pre_blowup",
            Check::RowSum => "row_sum",
            Check::HalfDeviation => "half_deviation",
            Check::Lemma => "lemma",
            Check::CollatzSinogowitz => "collatz_sinogowitz",
            Check::BoundChain => "bound_chain",
            Check::CaseChain => "case_chain",
        }
    }

    fn needs_interval(self) -> bool {
        matches!(
            self,
            Check::Theorem | Check::PreBlowup | Check::Lemma | Check::CollatzSinogowitz | Check::BoundChain
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::param(format!("unknown check `{s}`")))
    }
}

/// Polynomials used by [`Check::Lemma`]; `x^2 - (d-1)x` is added per graph.
pub fn lemma_polynomials() -> Vec<Polynomial> {
    [&[0, 1][..], &[0, -1], &[0, 0, 1], &[0, -2, 0, 1], &[1, 0, -3, 0, 1], &[-3, 2, 1, -1]]
        .iter()
        .map(|c| Polynomial::from_i64(c))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub failing_check: Check,
    pub details: String,
}

/// Result of running a set of checks on one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphOutcome {
    pub failures: Vec<(Check, String)>,
    pub inconclusive: bool,
    /// Present when an interval was computed.
    pub report: Option<BoundReport>,
}

impl GraphOutcome {
    pub fn gap_ratio(&self) -> f64 {
        self.report.as_ref().map_or(0.0, |r| r.gap_ratio)
    }
}

pub fn check_graph(g: &Graph, checks: &[Check], tol: f64) -> Result<GraphOutcome> {
    let stats = degree_stats(g)?;
    let mut failures = Vec::new();
    let mut fail = |check: Check, details: String| failures.push((check, details));
    let wants = |c: Check| checks.contains(&c);

    if wants(Check::HalfDeviation) && !stats.half_deviation_identity_holds() {
        fail(Check::HalfDeviation, format!("high-side deviation {} != s/2 = {}", stats.high_side_deviation(), stats.half_s()));
    }
    if wants(Check::RowSum) {
        let rs = intermediate_rowsum_check_with(g, &stats);
        if !rs.pass {
            fail(
                Check::RowSum,
                format!("vertex {:?}: row {} > budget {} (d = {})", rs.witness, rs.max_row, rs.budget, rs.d_ceil),
            );
        }
    }
    if wants(Check::CaseChain) {
        for u in 0..g.n() {
            let dec = per_vertex_case_decomposition_with(g, &stats, u)?;
            if !dec.chain_holds() || dec.slack < crate::exact::zero() {
                fail(Check::CaseChain, format!("vertex {u}: case {} slack {}", dec.case.number(), dec.slack));
                break;
            }
        }
    }

    let mut inconclusive = false;
    let mut report = None;
    if checks.iter().any(|c| c.needs_interval()) {
        let rho = certified_interval(g, tol)?;
        let r = evaluate_bounds_with(g, &stats, &rho);
        let mut verdict = |check: Check, v: Verdict, what: &str| match v {
            Verdict::Fail => fail(check, format!("{what}: rho in [{}, {}], s = {}", r.rho_lo, r.rho_hi, r.s)),
            Verdict::Inconclusive => inconclusive = true,
            Verdict::Pass => {}
        };
        if wants(Check::Theorem) {
            verdict(Check::Theorem, r.verdict_theorem1, "rho - 2m/n > sqrt(s/2)");
        }
        if wants(Check::PreBlowup) {
            verdict(Check::PreBlowup, r.verdict_pre_blowup, "rho - 2m/n > 1 + sqrt(s/2)");
        }
        if wants(Check::CollatzSinogowitz) && !(rho.lo >= stats.avg_degree && rho.hi >= stats.avg_degree) {
            fail(Check::CollatzSinogowitz, format!("interval [{}, {}] below 2m/n = {}", rho.lo, rho.hi, stats.avg_degree));
        }
        if wants(Check::BoundChain) && !r.bound_chain_ordered() {
            fail(Check::BoundChain, format!("bounds out of order for s = {}", r.s));
        }
        if wants(Check::Lemma) {
            let mut polys = lemma_polynomials();
            polys.push(Polynomial::shifted_square(stats.d_ceil as i64 - 1));
            for f in &polys {
                let lc = lemma_spot_check(g, f, &rho);
                if !lc.pass {
                    fail(Check::Lemma, format!("f = {f}: f(rho) >= {} > {}", lc.f_rho_lower(), lc.row_sum_bound));
                }
            }
        }
        report = Some(r);
    }
    Ok(GraphOutcome { failures, inconclusive, report })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub corpus_id: String,
    pub checks: Vec<Check>,
    pub graphs_checked: u64,
    pub violations: Vec<Violation>,
    /// Graphs whose interval did not converge; never counted as passes of the
    /// interval checks, never as violations.
    pub inconclusive: u64,
    pub max_gap_ratio: f64,
    pub max_gap_ratio_witness: Option<String>,
    pub runtime_secs: f64,
}

impl CorpusSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    /// Equality ignoring `runtime_secs`.
    pub fn same_result(&self, other: &CorpusSummary) -> bool {
        CorpusSummary { runtime_secs: 0.0, ..self.clone() } == CorpusSummary { runtime_secs: 0.0, ..other.clone() }
    }
}

/// Accumulator for a slice of a corpus. Merging is associative; ties on the
/// maximum ratio keep the earlier witness, so the result depends only on the
/// order of the parts, not on which worker produced them.
#[derive(Clone, Debug, Default)]
pub(crate) struct Partial {
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub inconclusive: u64,
    pub best: Option<(f64, String)>,
}

impl Partial {
    pub fn record(&mut self, g: &Graph, outcome: GraphOutcome) {
        self.checked += 1;
        self.inconclusive += u64::from(outcome.inconclusive);
        let ratio = outcome.gap_ratio();
        if !outcome.failures.is_empty() {
            let graph6 = g.to_graph6();
            self.violations.extend(outcome.failures.into_iter().map(|(failing_check, details)| Violation {
                graph6: graph6.clone(),
                failing_check,
                details,
            }));
        }
        if self.best.as_ref().is_none_or(|(b, _)| ratio > *b) {
            self.best = Some((ratio, g.to_graph6()));
        }
    }

    pub fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.inconclusive += other.inconclusive;
        self.violations.extend(other.violations);
        if let Some((ratio, witness)) = other.best {
            if self.best.as_ref().is_none_or(|(b, _)| ratio > *b) {
                self.best = Some((ratio, witness));
            }
        }
        self
    }

    pub fn finish(self, corpus_id: String, checks: &[Check], runtime_secs: f64) -> CorpusSummary {
        let (max_gap_ratio, witness) = match self.best {
            Some((r, w)) => (r, Some(w)),
            None => (0.0, None),
        };
        CorpusSummary {
            corpus_id,
            checks: checks.to_vec(),
            graphs_checked: self.checked,
            violations: self.violations,
            inconclusive: self.inconclusive,
            max_gap_ratio,
            max_gap_ratio_witness: witness,
            runtime_secs,
        }
    }
}
