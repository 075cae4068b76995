use num_bigint::BigInt;
use num_rational::BigRational;

use super::Graph;
use crate::error::{Error, Result};
use crate::exact::ExactRational;

/// Degree sequence statistics used throughout the bound chain.
///
/// `d_ceil` is the rounded-up average degree `d`. Vertices of degree at least
/// `d` form `partition_high`, the rest `partition_low`; when the average is an
/// integer, vertices of degree exactly `d` sit in the high part and contribute
/// zero deviation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub avg_degree: ExactRational,
    /// `sum_v |d(v) - 2m/n|`.
    pub s: ExactRational,
    pub d_ceil: usize,
    pub partition_high: Vec<usize>,
    pub partition_low: Vec<usize>,
    /// `n * s`, always an integer.
    pub s_times_n: u64,
}

pub fn degree_stats(g: &Graph) -> Result<DegreeStats> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let degrees = g.degrees();
    let two_m = 2 * g.m() as u64;
    // n * |d - 2m/n| = |n d - 2m|
    let s_times_n: u64 = degrees.iter().map(|&d| (n as u64 * d as u64).abs_diff(two_m)).sum();
    let d_ceil = two_m.div_ceil(n as u64) as usize;
    let (partition_high, partition_low) = (0..n).partition(|&v| degrees[v] >= d_ceil);

    Ok(DegreeStats {
        degrees,
        avg_degree: BigRational::new(BigInt::from(two_m), BigInt::from(n)),
        s: BigRational::new(BigInt::from(s_times_n), BigInt::from(n)),
        d_ceil,
        partition_high,
        partition_low,
        s_times_n,
    })
}

impl DegreeStats {
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// `sum_{v in W_{>=d}} (d(v) - 2m/n)`; equals `s/2` on every graph.
    pub fn high_side_deviation(&self) -> ExactRational {
        BigRational::new(BigInt::from(self.scaled_high_deviation()), BigInt::from(self.n()))
    }

    // n * sum_{v in W_{>=d}} (d(v) - 2m/n)
    fn scaled_high_deviation(&self) -> i64 {
        let n = self.n() as i64;
        let two_m = self.two_m() as i64;
        self.partition_high.iter().map(|&v| n * self.degrees[v] as i64 - two_m).sum()
    }

    /// `sum_{v in W_{>=d}} (d(v) - d)`, bounded above by `s/2`.
    pub fn high_side_excess(&self) -> u64 {
        self.partition_high.iter().map(|&v| (self.degrees[v] - self.d_ceil) as u64).sum()
    }

    pub fn half_deviation_identity_holds(&self) -> bool {
        // both sides multiplied by 2n
        2 * self.scaled_high_deviation() == self.s_times_n as i64
    }

    pub fn is_regular(&self) -> bool {
        self.s_times_n == 0
    }

    /// `s/2` as an exact rational.
    pub fn half_s(&self) -> ExactRational {
        BigRational::new(BigInt::from(self.s_times_n), BigInt::from(2 * self.n() as u64))
    }

    /// `2m` as an integer.
    pub fn two_m(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).sum()
    }
}
