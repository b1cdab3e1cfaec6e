//! Exact values and their decimal rendering.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// An exact expected payoff in chips.
pub type Value = BigRational;

pub fn chips(tau: u32) -> Value {
    BigRational::from_integer(BigInt::from(tau))
}

/// Renders `value` with `places` decimals, rounding half away from zero.
pub fn to_decimal(value: &Value, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let numer = value.numer().abs() * &scale;
    let denom = value.denom();
    // floor((2n + d) / 2d) rounds the half up in magnitude
    let (scaled, _) = (numer * 2u32 + denom).div_rem(&(denom * 2u32));
    let digits = scaled.to_string();
    let negative = value.numer().sign() == Sign::Minus && scaled.sign() != Sign::NoSign;
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let places = places as usize;
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = padded.split_at(padded.len() - places);
    format!("{sign}{int}.{frac}")
}

pub fn to_f64(value: &Value) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}
