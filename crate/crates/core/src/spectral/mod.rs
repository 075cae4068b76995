//! Spectral radius enclosures and polynomial row-sum certificates.

mod interval;
mod poly;

pub use interval::{
    certified_interval, certified_interval_with, iteration_cap, IntervalOptions, SpectralInterval, DEFAULT_TOL,
};
pub use poly::{poly_apply_ones, row_sum_poly_bound, Polynomial};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, ExactRational};
use crate::graph::Graph;

/// Larger root of `x^2 - (d-1) x - c`, i.e. `(d-1)/2 + sqrt((d-1)^2/4 + c)`.
///
/// If `rho^2 - (d-1) rho <= c` then `rho` is at most this value.
pub fn quadratic_radius_bound(d: u64, c: &ExactRational) -> Result<f64> {
    if c.is_negative() {
        return Err(Error::param(format!("quadratic bound needs c >= 0, got {c}")));
    }
    let shift = BigRational::from_integer(BigInt::from(d) - 1);
    quadratic_root(&shift, c)
}

/// Larger root of `x^2 - shift x - c`; requires `shift^2/4 + c >= 0`.
pub fn quadratic_root(shift: &ExactRational, c: &ExactRational) -> Result<f64> {
    let half = shift / BigRational::from_integer(2.into());
    let disc = &half * &half + c;
    if disc.is_negative() {
        return Err(Error::param(format!("x^2 - {shift} x - {c} has no real root")));
    }
    Ok(exact::to_f64(&half) + exact::to_f64(&disc).sqrt())
}

/// Outcome of testing `f(rho) <= max_u r_u(f(A))` against a certified interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub row_sum_bound: BigInt,
    pub pass: bool,
    lower_numer: BigInt,
    lower_denom: BigInt,
}

impl LemmaCheck {
    /// Certified lower bound on `f(rho)`: `f(lo) - L (hi - lo)` with `L`
    /// bounding `|f'|` on `[-hi, hi]`.
    pub fn f_rho_lower(&self) -> ExactRational {
        BigRational::new(self.lower_numer.clone(), self.lower_denom.clone())
    }
}

/// Refutes the row-sum bound only if `f(rho)` provably exceeds it.
///
/// Evaluated on numerators and denominators separately, without reducing
/// fractions along the way.
pub fn lemma_spot_check(g: &Graph, f: &Polynomial, rho: &SpectralInterval) -> LemmaCheck {
    let row_sum_bound = row_sum_poly_bound(g, f);
    let (p, q) = (rho.lo.numer(), rho.lo.denom());
    let (hp, hq) = (rho.hi.numer().abs(), rho.hi.denom());
    let deg = f.degree().unwrap_or(0);
    let c = f.coeffs();

    // f(lo) = n1 / q^deg
    let mut n1 = BigInt::zero();
    let mut q_pow = BigInt::one();
    for ck in c.iter().rev() {
        n1 = n1 * p + ck * &q_pow;
        q_pow *= q;
    }
    if c.is_empty() {
        q_pow = BigInt::one();
    } else {
        // the loop ran deg + 1 times
        q_pow /= q;
    }

    // sum_k |c_k| k hi^(k-1) = n2 / hq^(deg-1)
    let mut n2 = BigInt::zero();
    let mut hq_pow = BigInt::one();
    for (k, ck) in c.iter().enumerate().skip(1).rev() {
        n2 = n2 * &hp + ck.abs() * BigInt::from(k) * &hq_pow;
        hq_pow *= hq;
    }
    if deg >= 1 {
        hq_pow /= hq;
    }

    // hi - lo = w / (hq q)
    let w = &hp * q - p * hq;
    let r = hq * q;
    let lower_numer = &n1 * &hq_pow * &r - &n2 * &w * &q_pow;
    let lower_denom = q_pow * hq_pow * r;
    let pass = lower_numer <= &row_sum_bound * &lower_denom;
    LemmaCheck { row_sum_bound, pass, lower_numer, lower_denom }
}
