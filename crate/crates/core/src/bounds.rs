//! The bound chain from degree statistics to `rho - 2m/n <= sqrt(s/2)`.
//!
//! With `d = ceil(2m/n)` and `f(x) = x^2 - (d-1) x`, every row sum of `f(A)` is
//! at most `d + s/2`. The row-sum lemma then gives `f(rho) <= d + s/2`, hence
//! `rho <= d + sqrt(s/2)` and `rho - 2m/n <= 1 + sqrt(s/2)`. Applying that to
//! the `t`-fold blow-up, where `rho`, `2m/n` scale by `t` and `s` by `t^2`, and
//! letting `t` grow removes the additive `1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, le_sqrt, round_sig15, serde_rational, ExactRational};
use crate::graph::{degree_stats, DegreeStats, Graph};
use crate::spectral::{certified_interval, poly_apply_ones, quadratic_root, Polynomial, SpectralInterval};

fn rat(v: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(v.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The enclosure did not converge, or is too wide to decide.
    Inconclusive,
}

impl Verdict {
    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }
}

/// `max_u r_u(A^2 - (d-1) A)` against the budget `d + s/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSumCheck {
    pub d_ceil: usize,
    pub max_row: ExactRational,
    pub budget: ExactRational,
    pub pass: bool,
    /// A vertex whose row exceeds the budget, when one does.
    pub witness: Option<usize>,
}

pub fn intermediate_rowsum_check(g: &Graph) -> RowSumCheck {
    let stats = degree_stats(g).expect("graphs are nonempty");
    intermediate_rowsum_check_with(g, &stats)
}

pub fn intermediate_rowsum_check_with(g: &Graph, stats: &DegreeStats) -> RowSumCheck {
    let d = stats.d_ceil;
    let rows = poly_apply_ones(g, &Polynomial::shifted_square(d as i64 - 1));
    let (argmax, max_row) = rows.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).unwrap();
    let budget = rat(d) + stats.half_s();
    let max_row = rat(max_row.clone());
    let pass = max_row <= budget;
    RowSumCheck { d_ceil: d, max_row, budget, pass, witness: (!pass).then_some(argmax) }
}

/// Which side of `d` the vertex degree falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProofCase {
    /// `d(u) <= d - 1`
    LowDegree,
    /// `d(u) >= d`
    HighDegree,
}

impl ProofCase {
    pub fn number(self) -> u8 {
        match self {
            ProofCase::LowDegree => 1,
            ProofCase::HighDegree => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    Eq,
    Le,
    Lt,
}

/// One line of the displayed inequality chain and how it relates to the line
/// before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub label: &'static str,
    pub value: ExactRational,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseDecomposition {
    pub case: ProofCase,
    /// `(|N(u) ∩ W_{<=d-1}|, |N(u) ∩ W_{>=d}|)`
    pub neighbor_split: (usize, usize),
    /// `r_u(A^2 - (d-1) A)`
    pub row: ExactRational,
    /// `d + s/2 - row`
    pub slack: ExactRational,
    /// Starts at `r_u(A^2)`; the first step carries `Relation::Eq`.
    pub chain: Vec<ChainStep>,
}

impl CaseDecomposition {
    /// Every step relates to its predecessor as recorded.
    pub fn chain_holds(&self) -> bool {
        self.chain.windows(2).all(|w| match w[1].relation {
            Relation::Eq => w[0].value == w[1].value,
            Relation::Le => w[0].value <= w[1].value,
            Relation::Lt => w[0].value < w[1].value,
        })
    }
}

pub fn per_vertex_case_decomposition(g: &Graph, u: usize) -> Result<CaseDecomposition> {
    let stats = degree_stats(g)?;
    per_vertex_case_decomposition_with(g, &stats, u)
}

pub fn per_vertex_case_decomposition_with(g: &Graph, stats: &DegreeStats, u: usize) -> Result<CaseDecomposition> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    let deg = &stats.degrees;
    let d = stats.d_ceil as i64;
    let du = deg[u] as i64;
    let half_s = stats.half_s();
    let is_high = |v: usize| deg[v] as i64 >= d;

    let nbrs = g.neighbors(u);
    let low_sum: i64 = nbrs.iter().filter(|&&v| !is_high(v)).map(|&v| deg[v] as i64).sum();
    let high_sum: i64 = nbrs.iter().filter(|&&v| is_high(v)).map(|&v| deg[v] as i64).sum();
    let high_count = nbrs.iter().filter(|&&v| is_high(v)).count() as i64;
    let low_count = nbrs.len() as i64 - high_count;
    let nbr_excess: i64 = high_sum - d * high_count;
    let excess = stats.high_side_excess() as i64;

    let step = |label, value: ExactRational, relation| ChainStep { label, value, relation };
    let r2 = low_sum + high_sum;
    let mut chain = vec![
        step("r_u(A^2)", rat(r2), Relation::Eq),
        step("low-neighbour degrees + high-neighbour degrees", rat(low_sum + high_sum), Relation::Eq),
        step(
            "(d-1)|N∩W_low| + sum_{N∩W_high}(d(v)-d) + d|N∩W_high|",
            rat((d - 1) * low_count + nbr_excess + d * high_count),
            Relation::Le,
        ),
    ];
    let case = if du < d {
        chain.extend([
            step("d|N(u)| + sum_{W_high}(d(v)-d)", rat(d * du + excess), Relation::Le),
            step("(d-1)d(u) + d - 1 + s/2", rat((d - 1) * du + d - 1) + &half_s, Relation::Le),
            step("(d-1)d(u) + d + s/2", rat((d - 1) * du + d) + &half_s, Relation::Lt),
        ]);
        ProofCase::LowDegree
    } else {
        chain.extend([
            step("d|N(u)| + sum_{W_high, v≠u}(d(v)-d)", rat(d * du + excess - (du - d)), Relation::Le),
            step(
                "(d-1)d(u) + d(u) + sum_{W_high}(d(v)-d) - (d(u)-d)",
                rat((d - 1) * du + du + excess - (du - d)),
                Relation::Eq,
            ),
            step("(d-1)d(u) + d + sum_{W_high}(d(v)-d)", rat((d - 1) * du + d + excess), Relation::Eq),
            step("(d-1)d(u) + d + s/2", rat((d - 1) * du + d) + &half_s, Relation::Le),
        ]);
        ProofCase::HighDegree
    };
    let row = rat(r2 - (d - 1) * du);
    let slack = rat(d) + &half_s - &row;
    Ok(CaseDecomposition { case, neighbor_split: (low_count as usize, high_count as usize), row, slack, chain })
}

/// Per-graph record of every quantity in the bound chain.
///
/// Rationals serialize as `"p/q"` strings and floats carry at most 15
/// significant digits, so the JSON form parses back to an identical value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    #[serde(with = "serde_rational")]
    pub avg_degree: ExactRational,
    #[serde(with = "serde_rational")]
    pub s: ExactRational,
    pub d_ceil: usize,
    pub rho_lo: f64,
    pub rho_hi: f64,
    #[serde(with = "serde_rational")]
    pub rho_lo_exact: ExactRational,
    #[serde(with = "serde_rational")]
    pub rho_hi_exact: ExactRational,
    pub rho_converged: bool,
    /// `sqrt(s)`
    pub bound_nikiforov06: f64,
    /// `sqrt(9s/10)`
    pub bound_zhang: f64,
    /// `sqrt(2s/3)`
    pub bound_rw: f64,
    /// `sqrt(s/2)`
    pub bound_theorem1: f64,
    /// `1 + sqrt(s/2)`
    pub bound_pre_blowup: f64,
    /// `max(rho_lo - 2m/n, 0)`
    pub gap: f64,
    /// `gap / sqrt(s)`, or 0 when `s = 0`.
    pub gap_ratio: f64,
    pub verdict_nikiforov06: Verdict,
    pub verdict_zhang: Verdict,
    pub verdict_rw: Verdict,
    pub verdict_theorem1: Verdict,
    pub verdict_pre_blowup: Verdict,
}

impl BoundReport {
    pub fn interval(&self) -> SpectralInterval {
        SpectralInterval {
            lo: self.rho_lo_exact.clone(),
            hi: self.rho_hi_exact.clone(),
            converged: self.rho_converged,
            iterations: 0,
        }
    }

    pub fn verdicts(&self) -> [(&'static str, Verdict); 5] {
        [
            ("nikiforov06", self.verdict_nikiforov06),
            ("zhang", self.verdict_zhang),
            ("rw", self.verdict_rw),
            ("theorem1", self.verdict_theorem1),
            ("pre_blowup", self.verdict_pre_blowup),
        ]
    }

    pub fn any_fail(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| v.is_fail())
    }

    /// `sqrt(s/2) < sqrt(2s/3) < sqrt(9s/10) < sqrt(s)` when `s > 0`.
    pub fn bound_chain_ordered(&self) -> bool {
        if self.s.is_zero() {
            return self.bound_theorem1 == 0.0 && self.bound_nikiforov06 == 0.0;
        }
        self.bound_theorem1 < self.bound_rw && self.bound_rw < self.bound_zhang && self.bound_zhang < self.bound_nikiforov06
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Header line plus one row per report.
    pub fn to_csv(reports: &[BoundReport]) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in reports {
            w.serialize(r).expect("report serializes");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf8 csv")
    }
}

pub fn evaluate_bounds(g: &Graph, tol: f64) -> Result<BoundReport> {
    let stats = degree_stats(g)?;
    let rho = certified_interval(g, tol)?;
    Ok(evaluate_bounds_with(g, &stats, &rho))
}

// Verdict for `rho - 2m/n <= offset + sqrt(k s)`, relaxed by the interval width.
fn relaxed_verdict(gap_lo: &ExactRational, width: &ExactRational, offset: i64, ks: &ExactRational, converged: bool) -> Verdict {
    if !converged {
        return Verdict::Inconclusive;
    }
    if le_sqrt(&(gap_lo - width - rat(offset)), ks) {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

pub fn evaluate_bounds_with(g: &Graph, stats: &DegreeStats, rho: &SpectralInterval) -> BoundReport {
    let s = &stats.s;
    let gap_lo = &rho.lo - &stats.avg_degree;
    let width = rho.width();
    let scaled = |num: i64, den: i64| s * BigRational::new(num.into(), den.into());
    let sqrt_of = |v: &ExactRational| round_sig15(exact::to_f64(v).sqrt());

    let verdict = |offset, ks: &ExactRational| relaxed_verdict(&gap_lo, &width, offset, ks, rho.converged);
    let half_s = scaled(1, 2);
    let verdict_theorem1 = if le_sqrt(&gap_lo, &half_s) {
        Verdict::Pass
    } else if verdict(0, &half_s) == Verdict::Fail {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    };

    let gap = exact::to_f64(&gap_lo).max(0.0);
    let gap_ratio = if s.is_positive() { gap / exact::to_f64(s).sqrt() } else { 0.0 };

    BoundReport {
        n: g.n(),
        m: g.m(),
        avg_degree: stats.avg_degree.clone(),
        s: s.clone(),
        d_ceil: stats.d_ceil,
        rho_lo: exact::round_sig15_down(rho.lo_f64()),
        rho_hi: exact::round_sig15_up(rho.hi_f64()),
        rho_lo_exact: rho.lo.clone(),
        rho_hi_exact: rho.hi.clone(),
        rho_converged: rho.converged,
        bound_nikiforov06: sqrt_of(s),
        bound_zhang: sqrt_of(&scaled(9, 10)),
        bound_rw: sqrt_of(&scaled(2, 3)),
        bound_theorem1: sqrt_of(&half_s),
        bound_pre_blowup: round_sig15(1.0 + exact::to_f64(&half_s).sqrt()),
        gap: round_sig15(gap),
        gap_ratio: round_sig15(gap_ratio),
        verdict_nikiforov06: verdict(0, s),
        verdict_zhang: verdict(0, &scaled(9, 10)),
        verdict_rw: verdict(0, &scaled(2, 3)),
        verdict_theorem1,
        verdict_pre_blowup: verdict(1, &half_s),
    }
}

pub const DEFAULT_MAX_BLOWUP_VERTICES: usize = 20_000;

/// One row of the blow-up table for `G^(t)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlowupRow {
    pub t: usize,
    pub n: usize,
    pub m: usize,
    #[serde(with = "serde_rational")]
    pub avg_degree: ExactRational,
    #[serde(with = "serde_rational")]
    pub s: ExactRational,
    pub rho_lo: f64,
    pub rho_hi: f64,
    /// `|mid rho(G^(t)) - t mid rho(G)|`
    pub scaled_deviation: f64,
    /// Combined interval widths `width(G^(t)) + t width(G)`.
    pub scaled_allowance: f64,
    pub rho_scaled_check: bool,
    /// `1 + sqrt(s'/2) - (rho_lo' - avg')`
    pub pre_blowup_slack: f64,
    /// `pre_blowup_slack / t`; tends to `sqrt(s/2) - (rho - 2m/n)`.
    pub slack_per_t: f64,
    /// `max(rho_lo' - avg', 0) / sqrt(s')`, or 0 when `s' = 0`.
    pub gap_ratio: f64,
}

pub fn blowup_limit_demo(g: &Graph, ts: &[usize], tol: f64) -> Result<Vec<BlowupRow>> {
    blowup_limit_demo_limited(g, ts, tol, DEFAULT_MAX_BLOWUP_VERTICES)
}

pub fn blowup_limit_demo_limited(g: &Graph, ts: &[usize], tol: f64, max_vertices: usize) -> Result<Vec<BlowupRow>> {
    if let Some(&bad) = ts.iter().find(|&&t| t == 0) {
        return Err(Error::param(format!("blow-up factors must be at least 1, got {bad}")));
    }
    let base = certified_interval(g, tol)?;
    let base_mid = base.mid();
    let base_width = base.width_f64();
    ts.iter()
        .map(|&t| {
            let bg = g.blow_up_limited(t, max_vertices)?;
            let stats = degree_stats(&bg)?;
            let rho = if t == 1 { base.clone() } else { certified_interval(&bg, tol)? };
            let mid = rho.mid();
            let tf = t as f64;
            let scaled_deviation = (mid - tf * base_mid).abs();
            let scaled_allowance = rho.width_f64() + tf * base_width;
            // float rounding of the two midpoints
            let rounding = 4.0 * f64::EPSILON * mid.abs().max(1.0);
            let s = exact::to_f64(&stats.s);
            let gap = exact::to_f64(&(&rho.lo - &stats.avg_degree));
            let pre_blowup_slack = 1.0 + (s / 2.0).sqrt() - gap;
            Ok(BlowupRow {
                t,
                n: bg.n(),
                m: bg.m(),
                avg_degree: stats.avg_degree.clone(),
                s: stats.s.clone(),
                rho_lo: exact::round_sig15_down(rho.lo_f64()),
                rho_hi: exact::round_sig15_up(rho.hi_f64()),
                scaled_deviation: round_sig15(scaled_deviation),
                scaled_allowance: round_sig15(scaled_allowance),
                rho_scaled_check: scaled_deviation <= scaled_allowance + rounding,
                pre_blowup_slack: round_sig15(pre_blowup_slack),
                slack_per_t: round_sig15(pre_blowup_slack / tf),
                gap_ratio: round_sig15(if s > 0.0 { gap.max(0.0) / s.sqrt() } else { 0.0 }),
            })
        })
        .collect()
}

/// Best root of `x^2 - c x - max_u r_u(A^2 - c A)` over a grid of shifts `c`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ShiftBound {
    #[serde(with = "serde_rational")]
    pub c_best: ExactRational,
    pub bound: f64,
    /// The same root at `c = d - 1`.
    pub fixed_shift_bound: f64,
}

/// Grid `{0, 1/2, 1, ..., Δ}` together with `d - 1`.
pub fn default_shift_grid(g: &Graph, stats: &DegreeStats) -> Vec<ExactRational> {
    let mut grid: Vec<ExactRational> =
        (0..=2 * g.max_degree() as i64).map(|k| BigRational::new(k.into(), 2.into())).collect();
    let fixed = rat(stats.d_ceil as i64 - 1);
    if !grid.contains(&fixed) {
        grid.insert(0, fixed);
    }
    grid
}

pub fn optimized_shift_bound(g: &Graph) -> Result<ShiftBound> {
    let stats = degree_stats(g)?;
    let grid = default_shift_grid(g, &stats);
    optimized_shift_bound_with_grid(g, &grid)
}

pub fn optimized_shift_bound_with_grid(g: &Graph, grid: &[ExactRational]) -> Result<ShiftBound> {
    if grid.is_empty() {
        return Err(Error::param("shift grid is empty"));
    }
    let stats = degree_stats(g)?;
    let squares = poly_apply_ones(g, &Polynomial::from_i64(&[0, 0, 1]));
    let squares: Vec<i128> = squares.iter().map(|v| v.to_i128().expect("row sums of A^2 fit in i128")).collect();

    let root_at = |c: &ExactRational| -> Result<f64> {
        let (p, q) = (c.numer().to_i128(), c.denom().to_i128());
        let row_max = match (p, q) {
            (Some(p), Some(q)) => {
                let top = (0..g.n()).map(|u| q * squares[u] - p * stats.degrees[u] as i128).max().unwrap();
                BigRational::new(top.into(), q.into())
            }
            _ => (0..g.n())
                .map(|u| rat(squares[u]) - c * rat(stats.degrees[u] as i64))
                .max()
                .unwrap(),
        };
        quadratic_root(c, &row_max)
    };

    let mut best: Option<(ExactRational, f64)> = None;
    for c in grid {
        let root = root_at(c)?;
        if best.as_ref().is_none_or(|(_, b)| root < *b) {
            best = Some((c.clone(), root));
        }
    }
    let (c_best, bound) = best.unwrap();
    let fixed_shift_bound = root_at(&rat(stats.d_ceil as i64 - 1))?;
    Ok(ShiftBound { c_best, bound, fixed_shift_bound })
}
