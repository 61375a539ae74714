//! Exact arithmetic in `ℚ(ζ_L)` over the power basis `1, ζ, …, ζ^{φ(L)−1}`.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::angle::AngleFraction;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Largest conductor accepted by the power-basis arithmetic.
pub const CONDUCTOR_GUARD: u64 = 10_000;

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mobius(n: u64) -> i8 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Coefficients of `Φ_n`, constant term first, via `Π_{d|n} (x^d − 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut poly = vec![1i64];
    let divs = divisors(n);
    for &d in &divs {
        if mobius(n / d) == 1 {
            // multiply by x^d − 1
            let d = d as usize;
            let mut next = vec![0i64; poly.len() + d];
            for (i, &c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            // exact division by x^d − 1: q_i = q_{i−d} − p_i, read from the bottom up
            let d = d as usize;
            let len = poly.len() - d;
            let mut quot = vec![0i64; len];
            for i in 0..len {
                let prev = if i >= d { quot[i - d] } else { 0 };
                quot[i] = prev - poly[i];
            }
            poly = quot;
        }
    }
    poly
}

/// An element of `ℚ(ζ_L)` in power-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElement {
    conductor: u64,
    coords: Vec<Rational>,
}

/// Reduces `v` (length at least φ) modulo the monic `phi_poly` in place and truncates.
fn reduce_in_place(v: &mut Vec<Rational>, phi_poly: &[i64]) {
    let deg = phi_poly.len() - 1;
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[i], Rational::zero());
        for (j, &pj) in phi_poly[..deg].iter().enumerate() {
            if pj != 0 {
                v[i - deg + j] -= &c * Rational::from_integer(pj.into());
            }
        }
    }
    v.truncate(deg);
}

/// `x^k mod Φ_L` with integer coefficients.
fn reduce_monomial(k: usize, phi_poly: &[i64]) -> Vec<i128> {
    let deg = phi_poly.len() - 1;
    let mut v = vec![0i128; (k + 1).max(deg)];
    v[k] = 1;
    for i in (deg..v.len()).rev() {
        let c = v[i];
        if c == 0 {
            continue;
        }
        v[i] = 0;
        for (j, &pj) in phi_poly[..deg].iter().enumerate() {
            v[i - deg + j] -= c * pj as i128;
        }
    }
    v.truncate(deg);
    v
}

impl CycloElement {
    fn check(conductor: u64) -> Result<()> {
        if conductor == 0 || conductor > CONDUCTOR_GUARD {
            return Err(Error::ConductorOverflow(conductor));
        }
        Ok(())
    }

    pub fn zero(conductor: u64) -> Result<Self> {
        Self::check(conductor)?;
        Ok(Self { conductor, coords: vec![Rational::zero(); euler_phi(conductor) as usize] })
    }

    pub fn rational(r: Rational, conductor: u64) -> Result<Self> {
        let mut e = Self::zero(conductor)?;
        e.coords[0] = r;
        Ok(e)
    }

    /// `ζ_L^k`.
    pub fn root_of_unity(k: i64, conductor: u64) -> Result<Self> {
        Self::check(conductor)?;
        let k = k.rem_euclid(conductor as i64) as usize;
        let phi_poly = cyclotomic_polynomial(conductor);
        let coords = reduce_monomial(k, &phi_poly)
            .into_iter()
            .map(|c| Rational::from_integer(c.into()))
            .collect();
        Ok(Self { conductor, coords })
    }

    /// `cos(πp/q) = (ζ_{2q}^p + ζ_{2q}^{−p}) / 2`, embedded in `ℚ(ζ_L)`; needs `2q | L`.
    pub fn cos(angle: AngleFraction, conductor: u64) -> Result<Self> {
        let two_q = 2 * angle.q() as u64;
        if !conductor.is_multiple_of(two_q) {
            return Err(Error::Invalid(format!("2·{} does not divide conductor {conductor}", angle.q())));
        }
        let k = angle.p() * (conductor / two_q) as i64;
        let half = Rational::new(1.into(), 2.into());
        let sum = Self::root_of_unity(k, conductor)?.add(&Self::root_of_unity(-k, conductor)?)?;
        Ok(sum.scale(&half))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::Invalid(format!(
                "conductors differ: {} vs {}",
                self.conductor, other.conductor
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Self { conductor: self.conductor, coords })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { conductor: self.conductor, coords: self.coords.iter().map(|c| c * r).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.coords.len();
        let mut prod = vec![Rational::zero(); (2 * n).saturating_sub(1).max(n)];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_in_place(&mut prod, &cyclotomic_polynomial(self.conductor));
        Ok(Self { conductor: self.conductor, coords: prod })
    }

    /// Re-expresses the element in `ℚ(ζ_M)` for a multiple `M` of the conductor.
    pub fn embed(&self, conductor: u64) -> Result<Self> {
        Self::check(conductor)?;
        if !conductor.is_multiple_of(self.conductor) {
            return Err(Error::Invalid(format!("{} does not divide {conductor}", self.conductor)));
        }
        let step = (conductor / self.conductor) as usize;
        let mut v = vec![Rational::zero(); conductor as usize];
        for (j, c) in self.coords.iter().enumerate() {
            v[j * step] = c.clone();
        }
        reduce_in_place(&mut v, &cyclotomic_polynomial(conductor));
        Ok(Self { conductor, coords: v })
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The value, when every non-constant coordinate vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    /// Complex value at `ζ_L = e^{2πi/L}`, in double precision.
    pub fn to_complex(&self) -> (f64, f64) {
        let l = self.conductor as f64;
        self.coords.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * j as f64 / l;
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

/// `lcm(2q)` over the given angles (1 for none).
pub fn conductor_of(angles: impl IntoIterator<Item = AngleFraction>) -> u64 {
    angles.into_iter().fold(1u64, |l, a| l.lcm(&(2 * a.q() as u64)))
}
