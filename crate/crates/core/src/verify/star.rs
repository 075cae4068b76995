use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, ExactRational};
use crate::graph::{generate, Family};
use crate::spectral::certified_interval;

/// Stars up to this size are also run through the certified interval.
pub const STAR_CROSS_CHECK_LIMIT: usize = 10_000;

/// Closed-form row for `K_{1,n-1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StarRow {
    pub n: usize,
    pub rho: f64,
    pub gap: f64,
    #[serde(with = "exact::serde_rational")]
    pub s: ExactRational,
    /// `(sqrt(n-1) - 2(n-1)/n) / sqrt(s)`, zero when `s = 0`.
    pub ratio: f64,
    /// Whether the certified enclosure contains `sqrt(n-1)`; `None` when not run.
    pub cross_check: Option<bool>,
}

pub fn star_sweep(ns: &[usize]) -> Result<Vec<StarRow>> {
    star_sweep_with(ns, STAR_CROSS_CHECK_LIMIT, 1e-9)
}

pub fn star_sweep_with(ns: &[usize], cross_check_limit: usize, tol: f64) -> Result<Vec<StarRow>> {
    if let Some(&bad) = ns.iter().find(|&&n| n < 2) {
        return Err(Error::param(format!("star sweep needs n >= 2, got {bad}")));
    }
    ns.iter().map(|&n| star_row(n, cross_check_limit, tol)).collect()
}

fn star_row(n: usize, cross_check_limit: usize, tol: f64) -> Result<StarRow> {
    let nf = n as f64;
    let rho = (nf - 1.0).sqrt();
    let gap = rho - 2.0 * (nf - 1.0) / nf;
    let s = BigRational::new((2 * (n as u128 - 1) * (n as u128 - 2)).into(), (n as u128).into());
    let s_f = exact::to_f64(&s);
    let ratio = if s_f > 0.0 { gap / s_f.sqrt() } else { 0.0 };
    let cross_check = if n <= cross_check_limit {
        let rho_exact = certified_interval(&generate(&Family::Star { n }, None)?, tol)?;
        // lo^2 <= n - 1 <= hi^2, exactly
        let target = exact::int(n as i64 - 1);
        Some(&rho_exact.lo * &rho_exact.lo <= target && target <= &rho_exact.hi * &rho_exact.hi)
    } else {
        None
    };
    Ok(StarRow { n, rho, gap, s, ratio, cross_check })
}

/// About `points` integers spread geometrically over `[from, to]`, both ends
/// included, strictly increasing.
pub fn geometric_grid(from: usize, to: usize, points: usize) -> Vec<usize> {
    if from >= to || points < 2 {
        return vec![from.min(to)];
    }
    let step = (to as f64 / from as f64).powf(1.0 / (points - 1) as f64);
    let mut grid: Vec<usize> = (0..points).map(|k| (from as f64 * step.powi(k as i32)).round() as usize).collect();
    grid[0] = from;
    *grid.last_mut().expect("nonempty") = to;
    grid.dedup();
    grid
}
