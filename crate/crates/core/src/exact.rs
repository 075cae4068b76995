//! Exact rational helpers shared by every module.
//!
//! All inequality verdicts are decided on [`ExactRational`] values. Floats only
//! appear as reporting values, and the conversions here round in a stated
//! direction so that a float endpoint never claims more than the rational it
//! came from.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type ExactRational = BigRational;

pub fn int(value: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> ExactRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Exact value of a finite float.
pub fn from_f64(value: f64) -> ExactRational {
    BigRational::from_float(value).expect("finite float")
}

pub fn to_f64(value: &ExactRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Largest float not exceeding `value`.
pub fn to_f64_down(value: &ExactRational) -> f64 {
    let approx = to_f64(value);
    if approx.is_finite() && &from_f64(approx) > value {
        approx.next_down()
    } else {
        approx
    }
}

/// Smallest float not below `value`.
pub fn to_f64_up(value: &ExactRational) -> f64 {
    let approx = to_f64(value);
    if approx.is_finite() && &from_f64(approx) < value {
        approx.next_up()
    } else {
        approx
    }
}

/// Decides `a <= sqrt(b)` exactly for `b >= 0`.
pub fn le_sqrt(a: &ExactRational, b: &ExactRational) -> bool {
    debug_assert!(!b.is_negative());
    !a.is_positive() || a * a <= *b
}

/// Rounds to 15 significant decimal digits. Reported floats go through this so
/// that emitted text parses back to the identical value.
pub fn round_sig15(value: f64) -> f64 {
    if !value.is_finite() || value == 0.0 {
        return value;
    }
    format!("{value:.14e}").parse().unwrap_or(value)
}

/// Largest 15-digit value not above `value`.
pub fn round_sig15_down(value: f64) -> f64 {
    round_sig15_directed(value, false)
}

/// Smallest 15-digit value not below `value`.
pub fn round_sig15_up(value: f64) -> f64 {
    round_sig15_directed(value, true)
}

fn round_sig15_directed(value: f64, up: bool) -> f64 {
    let nearest = round_sig15(value);
    if !value.is_finite() || (up && nearest >= value) || (!up && nearest <= value) {
        return nearest;
    }
    // step the 15-digit mantissa one unit outward
    let text = format!("{value:.14e}");
    let (mantissa, exponent) = text.split_once('e').expect("exponent form");
    let digits: i64 = mantissa.replace('.', "").parse().expect("decimal mantissa");
    let exponent: i32 = exponent.parse().expect("decimal exponent");
    let stepped = if up { digits + 1 } else { digits - 1 };
    format!("{stepped}e{}", exponent - 14).parse().unwrap_or(value)
}

pub fn is_integer_valued(value: &ExactRational) -> bool {
    value.is_integer()
}

pub fn zero() -> ExactRational {
    BigRational::zero()
}

/// Serializes rationals as `"p/q"` strings (integers as `"p"`).
pub mod serde_rational {
    use super::ExactRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &ExactRational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactRational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("invalid rational `{text}`")))
    }
}
