//! Exact SL(2, ℚ) matrices and representations of the four-holed sphere group
//! `⟨A, B, C, D : ABCD = I⟩`.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, q, Rational};
use crate::surface::{BoundaryTraces, TracePoint};

/// A 2×2 rational matrix of determinant one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    e: [Rational; 4],
}

impl Mat2 {
    /// `[[e11, e12], [e21, e22]]`; rejected unless the determinant is exactly 1.
    pub fn new(e11: Rational, e12: Rational, e21: Rational, e22: Rational) -> Result<Self> {
        let det = &e11 * &e22 - &e12 * &e21;
        if !det.is_one() {
            return Err(Error::NotUnimodular(format_rational(&det)));
        }
        Ok(Self { e: [e11, e12, e21, e22] })
    }

    pub fn from_ratios(entries: [(i64, i64); 4]) -> Result<Self> {
        let [a, b, c, d] = entries.map(|(n, d)| q(n, d));
        Self::new(a, b, c, d)
    }

    pub fn identity() -> Self {
        Self { e: [Rational::one(), Rational::zero(), Rational::zero(), Rational::one()] }
    }

    pub fn entries(&self) -> &[Rational; 4] {
        &self.e
    }

    pub fn det(&self) -> Rational {
        &self.e[0] * &self.e[3] - &self.e[1] * &self.e[2]
    }

    pub fn trace(&self) -> Rational {
        &self.e[0] + &self.e[3]
    }

    /// `[[s, −q], [−r, p]]` for `[[p, q], [r, s]]`.
    pub fn inverse(&self) -> Self {
        let [p, q, r, s] = &self.e;
        Self { e: [s.clone(), -q.clone(), -r.clone(), p.clone()] }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.e;
        let [p, q, r, s] = &rhs.e;
        Mat2 { e: [a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s] }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e.each_ref().map(format_rational);
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Images of the four boundary loops, with `ABCD = I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepFour {
    pub a: Mat2,
    pub b: Mat2,
    pub c: Mat2,
    pub d: Mat2,
}

impl RepFour {
    /// Closes up a triple with `D = (ABC)⁻¹`.
    pub fn from_triple(a: Mat2, b: Mat2, c: Mat2) -> Self {
        let d = (&(&a * &b) * &c).inverse();
        Self { a, b, c, d }
    }

    pub fn relation_holds(&self) -> bool {
        (&(&(&self.a * &self.b) * &self.c) * &self.d).is_identity()
    }

    pub fn boundary_traces(&self) -> [Rational; 4] {
        [self.a.trace(), self.b.trace(), self.c.trace(), self.d.trace()]
    }

    /// `(tr AB, tr BC, tr CA)`.
    pub fn interior_traces(&self) -> TracePoint<Rational> {
        TracePoint::new(
            (&self.a * &self.b).trace(),
            (&self.b * &self.c).trace(),
            (&self.c * &self.a).trace(),
        )
    }
}

/// Boundary data and the point `(tr AB, tr BC, tr CA)`; fails when a boundary
/// trace is outside (−2, 2).
pub fn trace_coordinates(rep: &RepFour) -> Result<(BoundaryTraces<Rational>, TracePoint<Rational>)> {
    let b = BoundaryTraces::from_array(rep.boundary_traces())?;
    Ok((b, rep.interior_traces()))
}

/// True for `t ∈ {0, ±1}`: the rational levels `2cos(πr)` with `r` rational.
pub fn is_niven_level(t: &Rational) -> bool {
    t.is_zero() || t.is_one() || (-t).is_one()
}

fn check_in_range(what: &'static str, t: &Rational) -> Result<()> {
    let two = q(2, 1);
    if *t > -two.clone() && *t < two {
        Ok(())
    } else {
        Err(Error::OutOfRange { what, value: format_rational(t) })
    }
}

/// Membership of `(a, a, c, −c)` in the exceptional family: `a² + c² > 4`, and
/// `acos(a/2)/π` or `acos(c/2)/π` irrational.
pub fn is_in_f(a: &Rational, c: &Rational) -> Result<bool> {
    check_in_range("a", a)?;
    check_in_range("c", c)?;
    let wide = a * a + c * c > q(4, 1);
    let irrational_rotation = !is_niven_level(a) || !is_niven_level(c);
    Ok(wide && irrational_rotation)
}

/// Matrices of the worked example for boundary data `(1, 1, 7/4, −7/4)`.
pub fn example_rep() -> RepFour {
    let a = Mat2::from_ratios([(4, 5), (-3, 5), (7, 5), (1, 5)]).expect("det 1");
    let c = Mat2::from_ratios([(1, 1), (-1, 4), (1, 1), (3, 4)]).expect("det 1");
    RepFour::from_triple(a.clone(), a, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::kappa;

    #[test]
    fn determinant_is_enforced() {
        assert!(Mat2::from_ratios([(1, 1), (1, 1), (0, 1), (2, 1)]).is_err());
        assert!(Mat2::from_ratios([(2, 1), (1, 1), (1, 1), (1, 1)]).is_ok());
    }

    #[test]
    fn basic_algebra() {
        let id = Mat2::identity();
        assert_eq!(id.trace(), q(2, 1));
        assert_eq!(id.inverse(), id);
        let a = example_rep().a;
        assert_eq!(a.trace(), q(1, 1));
        assert!((&a * &a.inverse()).is_identity());
    }

    #[test]
    fn from_triple_examples() {
        let id = Mat2::identity();
        let r = RepFour::from_triple(id.clone(), id.clone(), id.clone());
        assert!(r.d.is_identity());
        assert!(trace_coordinates(&r).is_err());

        let r = example_rep();
        assert!(r.relation_holds());
        assert_eq!(r.d.trace(), q(-7, 4));
    }

    #[test]
    fn example_trace_coordinates() {
        let r = example_rep();
        let ab = &r.a * &r.b;
        assert_eq!(ab, Mat2::from_ratios([(-1, 5), (-3, 5), (7, 5), (-4, 5)]).unwrap());
        let (b, p) = trace_coordinates(&r).unwrap();
        assert_eq!(b, BoundaryTraces::new(q(1, 1), q(1, 1), q(7, 4), q(-7, 4)).unwrap());
        assert_eq!(p, TracePoint::new(q(-1, 1), q(0, 1), q(0, 1)));
        assert_eq!(kappa(&b, &p), q(0, 1));
    }

    #[test]
    fn family_membership() {
        assert!(is_in_f(&q(1, 1), &q(7, 4)).unwrap());
        assert!(!is_in_f(&q(1, 1), &q(1, 1)).unwrap());
        // (2 − 10⁻⁶)² = 4 − 4·10⁻⁶ + 10⁻¹² < 4, so a² + c² > 4 fails.
        assert!(!is_in_f(&q(0, 1), &q(1_999_999, 1_000_000)).unwrap());
        // Rational levels in {0, ±1} never reach a² + c² > 4.
        assert!(!is_in_f(&q(-1, 1), &q(1, 1)).unwrap());
        assert!(is_in_f(&q(3, 2), &q(3, 2)).unwrap());
        assert!(is_in_f(&q(2, 1), &q(1, 1)).is_err());
    }
}
