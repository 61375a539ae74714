//! Numeric substrate: exact rationals and doubles behind one trait.
//!
//! Geometry and dynamics are written once, generically over [`Field`], and
//! instantiated at [`Rational`] (exact mode) or `f64` (float mode). Because
//! every domain type is parameterised by its field, mixing modes inside the
//! library is a type error. [`Scalar`] is the tagged runtime value used at the
//! I/O boundary, where mixing is reported as [`Error::MixedMode`].

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Surface membership tolerance in float mode.
pub const SURFACE_TOL: f64 = 1e-9;
/// Tolerance for derived geometric identities in float mode.
pub const GEOMETRY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// An ordered field we can do trace geometry over.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const MODE: Mode;

    /// Hashable identity used for orbit deduplication.
    type Key: Hash + Eq + Clone + fmt::Debug + Send + Sync;

    fn from_i64(n: i64) -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    /// Square root; exact mode succeeds only on perfect rational squares.
    fn sqrt(&self) -> Result<Self>;
    /// Exactly zero in exact mode, `|self| <= tol` in float mode.
    fn near_zero(&self, tol: f64) -> bool;
    /// Deduplication key; float values snap to a grid of the given spacing.
    fn key(&self, quantum: f64) -> Self::Key;
    /// The exact value, when there is one.
    fn as_rational(&self) -> Option<&Rational>;

    /// `sigma − u·v − t`, the other root of the quadratic in `t`.
    fn vieta_root(sigma: &Self, u: &Self, v: &Self, t: &Self) -> Self;

    fn zero() -> Self {
        Self::from_i64(0)
    }

    fn one() -> Self {
        Self::from_i64(1)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

impl Field for Rational {
    const MODE: Mode = Mode::Exact;
    type Key = Rational;

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn sqrt(&self) -> Result<Self> {
        rational_sqrt(self).ok_or_else(|| Error::NeedsFloat(self.to_string()))
    }

    fn near_zero(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }

    fn key(&self, _quantum: f64) -> Rational {
        self.clone()
    }

    fn as_rational(&self) -> Option<&Rational> {
        Some(self)
    }

    fn vieta_root(sigma: &Self, u: &Self, v: &Self, t: &Self) -> Self {
        // One reduction over the common denominator instead of three.
        let (sd, ud, vd, td) = (sigma.denom(), u.denom(), v.denom(), t.denom());
        let uvd = ud * vd;
        let num = sigma.numer() * &uvd * td - u.numer() * v.numer() * sd * td - t.numer() * sd * &uvd;
        Rational::new(num, sd * uvd * td)
    }
}

impl Field for f64 {
    const MODE: Mode = Mode::Float;
    type Key = i64;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        n as f64 / d as f64
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn sqrt(&self) -> Result<Self> {
        if *self < 0.0 || self.is_nan() {
            return Err(Error::Invalid(format!("square root of {self}")));
        }
        Ok(f64::sqrt(*self))
    }

    fn near_zero(&self, tol: f64) -> bool {
        f64::abs(*self) <= tol
    }

    fn key(&self, quantum: f64) -> i64 {
        (*self / quantum).round() as i64
    }

    fn as_rational(&self) -> Option<&Rational> {
        None
    }

    fn vieta_root(sigma: &Self, u: &Self, v: &Self, t: &Self) -> Self {
        sigma - u * v - t
    }
}

/// Exact square root of a non-negative rational, if it is rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if Signed::is_negative(r) {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Parses `p/q`, `n`, or a decimal literal such as `-0.125` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = parse_int(n.trim()).ok_or_else(bad)?;
        let d: BigInt = parse_int(d.trim()).ok_or_else(bad)?;
        if Zero::is_zero(&d) {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let (negative, digits) = match int.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, int.strip_prefix('+').unwrap_or(int)),
        };
        if (digits.is_empty() && frac.is_empty())
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || !frac.bytes().all(|b| b.is_ascii_digit())
            || frac.len() > 64
        {
            return Err(bad());
        }
        let whole: BigInt = format!("{digits}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(whole, scale);
        return Ok(if negative { -value } else { value });
    }
    parse_int(s).map(Rational::from_integer).ok_or_else(bad)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if digits.is_empty() || digits.len() > 4096 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    Some(if negative { -n } else { n })
}

/// Formats an exact rational as `p/q` (or `n` when integral).
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats a double with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// A mode-tagged runtime number.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl Scalar {
    pub fn parse(s: &str, mode: Mode) -> Result<Self> {
        let r = parse_rational(s)?;
        Ok(match mode {
            Mode::Exact => Scalar::Exact(r),
            Mode::Float => Scalar::Float(<f64 as Field>::from_rational(&r)),
        })
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => Field::to_f64(r),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Result<&Rational> {
        match self {
            Scalar::Exact(r) => Ok(r),
            Scalar::Float(_) => Err(Error::MixedMode("float", "exact")),
        }
    }

    pub fn as_float(&self) -> Result<f64> {
        match self {
            Scalar::Float(x) => Ok(*x),
            Scalar::Exact(_) => Err(Error::MixedMode("exact", "float")),
        }
    }

    fn zip(
        &self,
        other: &Scalar,
        exact: impl FnOnce(&Rational, &Rational) -> Rational,
        float: impl FnOnce(f64, f64) -> f64,
    ) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(exact(a, b))),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(float(*a, *b))),
            (a, b) => Err(Error::MixedMode(a.mode().name(), b.mode().name())),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a + b, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a - b, |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.zip(other, |a, b| a * b, |a, b| a * b)
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if let Scalar::Exact(b) = other {
            if Zero::is_zero(b) {
                return Err(Error::Invalid("division by zero".into()));
            }
        }
        self.zip(other, |a, b| a / b, |a, b| a / b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => f.write_str(&format_rational(r)),
            Scalar::Float(x) => f.write_str(&format_float(*x)),
        }
    }
}

/// Shorthand for an exact rational `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}
