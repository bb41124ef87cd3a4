use std::fmt;
use std::ops::Neg;

use num::{BigInt, BigRational, Num, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Coefficient field for polynomials, tables and series.
///
/// Implemented for [`Rational`] (exact) and for `f64`/`f32`.
pub trait Scalar: Num + Clone + Neg<Output = Self> + PartialEq + fmt::Debug + fmt::Display {
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    /// True when arithmetic is exact, so that zero tests are meaningful.
    fn is_exact() -> bool;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&rat(n, d))
    }

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for BigRational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_exact() -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_exact() -> bool {
        false
    }
}

impl Scalar for f32 {
    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f32(r).unwrap_or(f32::NAN)
    }
    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
    fn is_exact() -> bool {
        false
    }
}

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-0.85"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str_radix(n.trim(), 10).map_err(|_| err())?;
        let d = BigInt::from_str_radix(d.trim(), 10).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if ip.is_empty() { "0" } else { ip }, fp);
        let mut n = BigInt::from_str_radix(&digits, 10).map_err(|_| err())?;
        if neg {
            n = -n;
        }
        let d = num::pow(BigInt::from(10), fp.len());
        return Ok(Rational::new(n, d));
    }
    let n = BigInt::from_str_radix(s, 10).map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

/// `3^{-k}`.
pub fn pow3_inv<T: Scalar>(k: u32) -> T {
    T::one() / T::from_i64(3).powi(k)
}
