use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// The angle `π·p/q`, kept reduced with `0 <= p < 2q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AngleFraction {
    p: i64,
    q: i64,
}

impl AngleFraction {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q <= 0 {
            return Err(Error::Invalid(format!("angle denominator must be positive, got {q}")));
        }
        let p = p.rem_euclid(2 * q);
        let g = p.gcd(&q);
        Ok(Self { p: p / g, q: q / g })
    }

    pub fn zero() -> Self {
        Self { p: 0, q: 1 }
    }

    pub fn half_pi() -> Self {
        Self { p: 1, q: 2 }
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn radians(self) -> f64 {
        PI * self.p as f64 / self.q as f64
    }

    pub fn cos(self) -> f64 {
        self.radians().cos()
    }

    /// `2·cos(πp/q)`, the trace level this angle encodes.
    pub fn trace_level(self) -> f64 {
        2.0 * self.cos()
    }

    /// The angle in [0, π] with the same cosine.
    pub fn folded(self) -> Self {
        if self.p > self.q {
            Self { p: 2 * self.q - self.p, q: self.q }
        } else {
            self
        }
    }

    /// `π − θ`.
    pub fn supplement(self) -> Self {
        Self::new(self.q - self.p, self.q).expect("positive denominator")
    }

    /// Order of rotation by twice this angle, for angles strictly inside (0, π).
    pub fn rotation_order(self) -> Option<u64> {
        let f = self.folded();
        if f.p == 0 || f.p == f.q {
            None
        } else {
            Some(f.q as u64)
        }
    }

    fn cmp_value(&self, other: &Self) -> Ordering {
        (i128::from(self.p) * i128::from(other.q)).cmp(&(i128::from(other.p) * i128::from(self.q)))
    }
}

impl PartialOrd for AngleFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AngleFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl Add for AngleFraction {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        let l = self.q.lcm(&other.q);
        Self::new(self.p * (l / self.q) + other.p * (l / other.q), l).expect("positive denominator")
    }
}

impl Neg for AngleFraction {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.p, self.q).expect("positive denominator")
    }
}

impl Sub for AngleFraction {
    type Output = Self;

    fn sub(self, other: Self) -> Self {
        self + -other
    }
}

impl fmt::Display for AngleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (0, _) => f.write_str("0"),
            (1, 1) => f.write_str("π"),
            (p, 1) => write!(f, "{p}π"),
            (1, q) => write!(f, "π/{q}"),
            (p, q) => write!(f, "{p}π/{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_range() {
        let a = AngleFraction::new(6, 8).unwrap();
        assert_eq!((a.p(), a.q()), (3, 4));
        let a = AngleFraction::new(-1, 3).unwrap();
        assert_eq!((a.p(), a.q()), (5, 3));
        let a = AngleFraction::new(4, 2).unwrap();
        assert_eq!((a.p(), a.q()), (0, 1));
        assert!(AngleFraction::new(1, 0).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = AngleFraction::new(1, 3).unwrap();
        let b = AngleFraction::new(1, 2).unwrap();
        assert_eq!(a.add(b), AngleFraction::new(5, 6).unwrap());
        assert_eq!(a.sub(b), AngleFraction::new(-1, 6).unwrap());
        assert_eq!(AngleFraction::new(5, 3).unwrap().folded(), a);
        assert_eq!(a.supplement(), AngleFraction::new(2, 3).unwrap());
        assert_eq!(AngleFraction::new(2, 5).unwrap().rotation_order(), Some(5));
        assert_eq!(AngleFraction::zero().rotation_order(), None);
        assert!((AngleFraction::new(1, 4).unwrap().trace_level() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(AngleFraction::new(4, 5).unwrap().to_string(), "4π/5");
    }
}
