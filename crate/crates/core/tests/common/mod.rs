//! Oracles shared by the integration tests. Nothing here calls into the library
//! for the quantity being checked.

#![allow(dead_code)]

use fourhole::scalar::{q, Rational};
use fourhole::TracePoint;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

/// κ from the defining polynomial.
pub fn kappa_oracle(t: [&Rational; 4], p: &TracePoint<Rational>) -> Rational {
    let [a, b, c, d] = t;
    let (x, y, z) = (&p.x, &p.y, &p.z);
    let sx = a * b + c * d;
    let sy = a * d + b * c;
    let sz = a * c + b * d;
    let s = a * a + b * b + c * c + d * d + a * b * c * d - q(4, 1);
    x * x + y * y + z * z + x * y * z - sx * x - sy * y - sz * z + s
}

/// Rationals `n/d` with `|n/d| < bound` (or `≤ bound` when `closed`), `d ≤ max_den`.
pub fn rational(bound: i64, max_den: i64, closed: bool) -> impl Strategy<Value = Rational> {
    (1..=max_den).prop_flat_map(move |d| {
        let lim = bound * d;
        let range = if closed { -lim..=lim } else { (-lim + 1)..=(lim - 1) };
        range.prop_map(move |n| q(n, d))
    })
}

pub fn traces() -> impl Strategy<Value = [Rational; 4]> {
    [rational(2, 16, false), rational(2, 16, false), rational(2, 16, false), rational(2, 16, false)]
}

pub fn point(bound: i64) -> impl Strategy<Value = TracePoint<Rational>> {
    (rational(bound, 16, true), rational(bound, 16, true), rational(bound, 16, true))
        .prop_map(|(x, y, z)| TracePoint::new(x, y, z))
}

/// Fixed-point reals with `DIGITS` decimal digits after the point.
pub struct Fixed;

impl Fixed {
    pub const DIGITS: u32 = 60;

    pub fn one() -> BigInt {
        num_traits::pow(BigInt::from(10), Self::DIGITS as usize)
    }

    pub fn from_rational(r: &Rational) -> BigInt {
        r.numer() * Self::one() / r.denom()
    }

    pub fn mul(a: &BigInt, b: &BigInt) -> BigInt {
        a * b / Self::one()
    }

    /// `arctan(1/n)` by its alternating series.
    fn arctan_inv(n: i64) -> BigInt {
        let n2 = BigInt::from(n * n);
        let mut power = Self::one() / n;
        let mut sum = BigInt::zero();
        let mut k = 0i64;
        while !power.is_zero() {
            let term = &power / (2 * k + 1);
            if k % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &n2;
            k += 1;
        }
        sum
    }

    /// Machin: `π = 16 arctan(1/5) − 4 arctan(1/239)`.
    pub fn pi() -> BigInt {
        Self::arctan_inv(5) * 16 - Self::arctan_inv(239) * 4
    }

    /// `(cos x, sin x)` by Taylor series after reducing into [−π, π].
    pub fn cos_sin(x: &BigInt) -> (BigInt, BigInt) {
        let two_pi = Self::pi() * 2;
        let mut x = x % &two_pi;
        if x > Self::pi() {
            x -= &two_pi;
        } else if x < -Self::pi() {
            x += &two_pi;
        }
        let (mut c, mut s) = (BigInt::zero(), BigInt::zero());
        // term = x^k / k!; the four residues of k feed cos and sin with alternating signs.
        let mut term = Self::one();
        let mut k = 0i64;
        while !term.is_zero() {
            match k % 4 {
                0 => c += &term,
                1 => s += &term,
                2 => c -= &term,
                _ => s -= &term,
            }
            k += 1;
            term = Self::mul(&term, &x) / k;
        }
        (c, s)
    }

    /// `cos(π·p/q)`.
    pub fn cos_pi_frac(p: i64, d: i64) -> BigInt {
        Self::cos_sin(&(Self::pi() * p / d)).0
    }

    /// `10^-k` in fixed point.
    pub fn epsilon(k: u32) -> BigInt {
        num_traits::pow(BigInt::from(10), (Self::DIGITS - k) as usize)
    }
}
