//! Scalar backends: exact rationals for ground-truth identity checks,
//! `f64` and `Complex64` for the numerical side.
//!
//! Backends are distinct types, so mixing them inside one computation is a
//! compile-time error; the I/O layer picks a backend before any arithmetic
//! happens.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational, stored in lowest terms with positive
/// denominator (guaranteed by `num-rational`).
pub type Rational = BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    /// Whether arithmetic is exact (no rounding). Selects the elimination
    /// strategy: fraction-free Bareiss when exact, partial pivoting otherwise.
    const EXACT: bool;
    const BACKEND: &'static str;

    fn from_int(v: i64) -> Self;
    fn conjugate(&self) -> Self;
    /// Magnitude as `f64`; used for pivot selection and tolerance checks only.
    fn abs_f64(&self) -> f64;
    /// Real part as `f64`; used for sign checks in reports.
    fn re_f64(&self) -> f64;
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const BACKEND: &'static str = "rational";

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    fn abs_f64(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }

    fn re_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const BACKEND: &'static str = "float";

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn conjugate(&self) -> Self {
        *self
    }

    fn abs_f64(&self) -> f64 {
        self.abs()
    }

    fn re_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;
    const BACKEND: &'static str = "complex";

    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn conjugate(&self) -> Self {
        self.conj()
    }

    fn abs_f64(&self) -> f64 {
        self.norm()
    }

    fn re_f64(&self) -> f64 {
        self.re
    }
}

/// Parse a rational from "p/q", an integer, or a finite decimal like "-1.25".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let digits = frac_part.trim();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let whole: BigInt = if int_part.trim() == "-" || int_part.trim().is_empty() {
            BigInt::zero()
        } else {
            int_part.trim().parse().ok()?
        };
        let scale = BigInt::from(10u32).pow(digits.len() as u32);
        let frac: BigInt = digits.parse().ok()?;
        let frac = if negative { -frac } else { frac };
        return Some(Rational::new(whole * &scale + frac, scale));
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(n))
}
