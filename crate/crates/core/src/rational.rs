//! Exact rational helpers shared by the geometry and rendering code.
//!
//! All geometry in this crate is carried out in arbitrary-precision
//! rationals; floating point never enters the computation path. The
//! multiply-by-four dynamics loses roughly two bits of float precision per
//! step, so exactness is not optional here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical reduced form.
pub type Rational = BigRational;

/// `num/den` from machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact `4^k` as a big integer.
pub fn pow4(k: usize) -> BigInt {
    BigInt::one() << (2 * k)
}

/// Exact `4^-k`.
pub fn quarter_pow(k: usize) -> Rational {
    Rational::new(BigInt::one(), pow4(k))
}

/// Exact `16^-k`.
pub fn sixteenth_pow(k: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << (4 * k))
}

/// Renders a rational as `num/den`, denominator always present.
pub fn render_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer into a reduced rational.
pub fn parse_ratio(s: &str) -> Result<Rational> {
    let err = || Error::Parse {
        input: s.to_string(),
        expected: "rational number `num/den`",
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Parses a decimal string such as `0.5746337359` into the exact rational
/// it denotes. Also accepts `num/den` form and bare integers.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    if s.contains('/') {
        return parse_ratio(s);
    }
    let err = || Error::Parse {
        input: s.to_string(),
        expected: "decimal number",
    };
    let t = s.trim();
    let (int_part, frac_part) = match t.split_once('.') {
        Some((i, f)) => (i, f),
        None => (t, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    let int_part = if int_part.is_empty() { "0" } else { int_part };
    if !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let int: BigInt = int_part.parse().map_err(|_| err())?;
    let mut num = int * BigInt::from(10u32).pow(frac_part.len() as u32);
    if !frac_part.is_empty() {
        let frac: BigInt = frac_part.parse().map_err(|_| err())?;
        if int_part.starts_with('-') {
            num -= frac;
        } else {
            num += frac;
        }
    }
    Ok(Rational::new(
        num,
        BigInt::from(10u32).pow(frac_part.len() as u32),
    ))
}

/// Renders a rational truncated (not rounded) to `digits` decimal places.
pub fn render_decimal_trunc(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r.numer() * &scale).div_floor(r.denom());
    let (int, frac) = scaled.div_mod_floor(&scale);
    let frac = frac.abs();
    let sign = if scaled.is_negative() && int.is_zero() {
        "-"
    } else {
        ""
    };
    format!("{sign}{int}.{frac:0width$}", width = digits as usize)
}
