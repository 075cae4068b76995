use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::ExactRational;
use crate::graph::Graph;

/// Integer-coefficient polynomial, constant term first. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `x^2 - c x`.
    pub fn shifted_square(c: i64) -> Self {
        Self::from_i64(&[0, -c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `sum_k |c_k| k r^(k-1)`, an upper bound on `|f'|` over `[-r, r]`.
    pub fn derivative_bound(&self, r: &ExactRational) -> ExactRational {
        let r = r.abs();
        let mut power = BigRational::from_integer(1.into());
        let mut total = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            total += BigRational::from_integer(c.abs() * BigInt::from(k)) * &power;
            power *= &r;
        }
        total
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Polynomial::new(
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let mag = c.abs();
            let unit = mag == BigInt::from(1);
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Row sums of `f(A)`, i.e. `f(A) 1`, by Horner's scheme on vectors: only
/// products `A y` are ever formed, never a matrix power.
pub fn poly_apply_ones(g: &Graph, f: &Polynomial) -> Vec<BigInt> {
    if let Some(fast) = apply_ones_i128(g, f) {
        return fast.into_iter().map(BigInt::from).collect();
    }
    let n = g.n();
    let mut y = vec![BigInt::zero(); n];
    let mut next = vec![BigInt::zero(); n];
    for c in f.coeffs().iter().rev() {
        for (u, slot) in next.iter_mut().enumerate() {
            let mut acc = c.clone();
            for &v in g.neighbors(u) {
                acc += &y[v];
            }
            *slot = acc;
        }
        std::mem::swap(&mut y, &mut next);
    }
    y
}

// Same recurrence in machine integers; `None` on overflow.
fn apply_ones_i128(g: &Graph, f: &Polynomial) -> Option<Vec<i128>> {
    let coeffs: Vec<i128> = f.coeffs().iter().map(|c| c.to_i128()).collect::<Option<_>>()?;
    let n = g.n();
    let mut y = vec![0i128; n];
    let mut next = vec![0i128; n];
    for &c in coeffs.iter().rev() {
        for (u, slot) in next.iter_mut().enumerate() {
            let mut acc = c;
            for &v in g.neighbors(u) {
                acc = acc.checked_add(y[v])?;
            }
            *slot = acc;
        }
        std::mem::swap(&mut y, &mut next);
    }
    Some(y)
}

/// `max_u r_u(f(A))`. For every polynomial `f`, `f(rho) <= max_u r_u(f(A))`.
///
/// The graph need not be connected: a nonnegative Perron vector `z` of the
/// component attaining `rho` satisfies `z^T f(A) 1 = f(rho) z^T 1`, so `f(rho)`
/// is a convex combination of row sums of that component, each dominated by
/// the global maximum.
pub fn row_sum_poly_bound(g: &Graph, f: &Polynomial) -> BigInt {
    poly_apply_ones(g, f).into_iter().max().expect("graph has at least one vertex")
}
