//! Certified enclosures of the spectral radius.
//!
//! For a connected component with at least one edge, power iteration on the
//! shifted matrix `A + (Δ/2) I` yields an approximate Perron vector. That
//! vector is quantized to strictly positive integers `q`, and two exact
//! certificates are read off it:
//!
//! * lower: the Rayleigh quotient `q^T A q / q^T q <= rho`, raised to the
//!   all-ones quotient `2m/n` when that is larger;
//! * upper: the Collatz–Wielandt ratio `max_i (A q)_i / q_i >= rho`.
//!
//! Both are computed in integer arithmetic, so the enclosure holds regardless
//! of how well the float iteration converged. They are then rounded outward to
//! dyadic rationals with a few more fractional bits than the tolerance needs,
//! which keeps later exact arithmetic on them cheap. The shift keeps the iteration
//! convergent on bipartite components, where `-rho` is also an eigenvalue.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{self, ExactRational};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-9;

/// `lo <= rho(G) <= hi`, both exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralInterval {
    pub lo: ExactRational,
    pub hi: ExactRational,
    /// `hi - lo <= tol` was reached before the iteration cap.
    pub converged: bool,
    pub iterations: usize,
}

impl SpectralInterval {
    fn point(value: ExactRational) -> Self {
        SpectralInterval { lo: value.clone(), hi: value, converged: true, iterations: 0 }
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    /// Lower endpoint rounded down.
    pub fn lo_f64(&self) -> f64 {
        exact::to_f64_down(&self.lo)
    }

    /// Upper endpoint rounded up.
    pub fn hi_f64(&self) -> f64 {
        exact::to_f64_up(&self.hi)
    }

    /// Width rounded up.
    pub fn width_f64(&self) -> f64 {
        exact::to_f64_up(&self.width())
    }

    pub fn mid(&self) -> f64 {
        exact::to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    pub fn contains(&self, value: f64) -> bool {
        let v = exact::from_f64(value);
        self.lo <= v && v <= self.hi
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalOptions {
    pub tol: f64,
    /// Per-component cap; defaults to `10 n ceil(log2(1/tol))`.
    pub max_iterations: Option<usize>,
}

impl Default for IntervalOptions {
    fn default() -> Self {
        IntervalOptions { tol: DEFAULT_TOL, max_iterations: None }
    }
}

impl IntervalOptions {
    pub fn with_tol(tol: f64) -> Self {
        IntervalOptions { tol, ..Default::default() }
    }
}

pub fn iteration_cap(n: usize, tol: f64) -> usize {
    let bits = (1.0 / tol).log2().ceil().max(1.0) as usize;
    (10 * n * bits).max(1)
}

pub fn certified_interval(g: &Graph, tol: f64) -> Result<SpectralInterval> {
    certified_interval_with(g, &IntervalOptions::with_tol(tol))
}

/// Enclosure of `rho(G)`, taken as the maximum over connected components.
///
/// When the cap is reached the best certified interval found so far is
/// returned with `converged = false`.
pub fn certified_interval_with(g: &Graph, opts: &IntervalOptions) -> Result<SpectralInterval> {
    if !(opts.tol > 0.0 && opts.tol.is_finite()) {
        return Err(Error::param(format!("tolerance must be positive and finite, got {}", opts.tol)));
    }
    let labels = g.component_labels();
    if labels.iter().all(|&c| c == 0) {
        return Ok(certify_connected(g, opts));
    }
    let mut total = SpectralInterval::point(BigRational::zero());
    for comp in g.connected_components() {
        if comp.graph.m() == 0 {
            continue;
        }
        let part = certify_connected(&comp.graph, opts);
        total.lo = total.lo.max(part.lo);
        total.hi = total.hi.max(part.hi);
        total.converged &= part.converged;
        total.iterations += part.iterations;
    }
    Ok(total)
}

fn certify_connected(g: &Graph, opts: &IntervalOptions) -> SpectralInterval {
    let n = g.n();
    if g.m() == 0 {
        return SpectralInterval::point(BigRational::zero());
    }
    let cap = opts.max_iterations.unwrap_or_else(|| iteration_cap(n, opts.tol));
    let tol_exact = exact::from_f64(opts.tol);
    let floor = BigRational::new(BigInt::from(2 * g.m()), BigInt::from(n));
    let shift = g.max_degree() as f64 / 2.0;
    let frac_bits = dyadic_bits(opts.tol);

    let mut x: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    normalize(&mut x);
    let mut ax = vec![0.0; n];
    let mut best_lo = floor;
    let mut best_hi: Option<ExactRational> = None;
    let mut next_certify = 0usize;
    let mut backoff = 1usize;
    let mut iterations = 0usize;

    loop {
        g.adjacency_mul(&x, &mut ax);
        let (lo_f, hi_f) = float_estimates(&x, &ax);
        let at_cap = iterations >= cap;
        if at_cap || (hi_f - lo_f <= 0.25 * opts.tol && iterations >= next_certify) {
            let (lo, hi) = certify_vector(g, &x, frac_bits);
            if lo > best_lo {
                best_lo = lo;
            }
            let hi = match best_hi.take() {
                Some(prev) if prev < hi => prev,
                _ => hi,
            };
            let done = &hi - &best_lo <= tol_exact;
            best_hi = Some(hi);
            if done || at_cap {
                return SpectralInterval {
                    lo: best_lo,
                    hi: best_hi.unwrap(),
                    converged: done,
                    iterations,
                };
            }
            // float estimate was optimistic; certify less often from here on
            next_certify = iterations + backoff;
            backoff *= 2;
        }
        for (xi, &yi) in x.iter_mut().zip(&ax) {
            *xi = yi + shift * *xi;
        }
        normalize(&mut x);
        iterations += 1;
    }
}

fn normalize(x: &mut [f64]) {
    let max = x.iter().copied().fold(0.0, f64::max);
    if max > 0.0 {
        x.iter_mut().for_each(|v| *v /= max);
    }
}

fn float_estimates(x: &[f64], ax: &[f64]) -> (f64, f64) {
    let num: f64 = x.iter().zip(ax).map(|(a, b)| a * b).sum();
    let den: f64 = x.iter().map(|a| a * a).sum();
    let hi = x.iter().zip(ax).map(|(a, b)| b / a).fold(f64::NEG_INFINITY, f64::max);
    (num / den, hi)
}

/// Exact Rayleigh and Collatz–Wielandt bounds for the integer quantization of
/// a positive vector on a connected graph with at least one edge.
fn certify_vector(g: &Graph, x: &[f64], frac_bits: u32) -> (ExactRational, ExactRational) {
    let two_m = 2 * g.m() as u128;
    // every product below is at most 2m * 4^K < 2^127
    let k = (126 - (128 - two_m.leading_zeros()) as i32).div_euclid(2).clamp(1, 52);
    let top = (1u128 << k) as f64;
    let max = x.iter().copied().fold(0.0, f64::max);
    let q: Vec<u128> = x.iter().map(|&v| ((v / max * top).round() as u128).clamp(1, 1 << k)).collect();

    let mut num = 0u128;
    let mut den = 0u128;
    let mut best = (0u128, 1u128);
    for (u, &qu) in q.iter().enumerate() {
        let y: u128 = g.neighbors(u).iter().map(|&v| q[v]).sum();
        num += qu * y;
        den += qu * qu;
        // y / qu > best.0 / best.1
        if y * best.1 > best.0 * qu {
            best = (y, qu);
        }
    }
    (dyadic_floor(num, den, frac_bits), dyadic_ceil(best.0, best.1, frac_bits))
}

// Outward rounding widens the interval by at most 2^(1-bits) <= tol / 128.
fn dyadic_bits(tol: f64) -> u32 {
    ((1.0 / tol).log2().ceil().max(0.0) as u32 + 8).clamp(32, 1000)
}

fn dyadic_floor(num: u128, den: u128, bits: u32) -> ExactRational {
    let scaled = (BigInt::from(num) << bits) / BigInt::from(den);
    BigRational::new(scaled, BigInt::from(1) << bits)
}

fn dyadic_ceil(num: u128, den: u128, bits: u32) -> ExactRational {
    let den = BigInt::from(den);
    let scaled = ((BigInt::from(num) << bits) + &den - 1) / den;
    BigRational::new(scaled, BigInt::from(1) << bits)
}
