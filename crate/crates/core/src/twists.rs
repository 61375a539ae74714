//! Dehn twists τ_X, τ_Y, τ_Z acting on trace coordinates.
//!
//! Each twist fixes one coordinate and is the composition of two Vieta
//! involutions on the other two; on its level sets it is conjugate to a
//! rotation by `2·acos(level/2)`.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{Field, GEOMETRY_TOL};
use crate::surface::{level_set, Axis, BoundaryTraces, TracePoint};

/// `τ_axis` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistGenerator {
    pub axis: Axis,
    pub inverse: bool,
}

impl TwistGenerator {
    pub const ALL: [TwistGenerator; 6] = [
        TwistGenerator { axis: Axis::X, inverse: false },
        TwistGenerator { axis: Axis::X, inverse: true },
        TwistGenerator { axis: Axis::Y, inverse: false },
        TwistGenerator { axis: Axis::Y, inverse: true },
        TwistGenerator { axis: Axis::Z, inverse: false },
        TwistGenerator { axis: Axis::Z, inverse: true },
    ];

    pub fn forward(axis: Axis) -> Self {
        Self { axis, inverse: false }
    }

    pub fn backward(axis: Axis) -> Self {
        Self { axis, inverse: true }
    }

    pub fn with_power(axis: Axis, power: i32) -> Result<Self> {
        match power {
            1 => Ok(Self::forward(axis)),
            -1 => Ok(Self::backward(axis)),
            p => Err(Error::Invalid(format!("twist power must be ±1, got {p}"))),
        }
    }

    pub fn power(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Self {
        Self { axis: self.axis, inverse: !self.inverse }
    }
}

impl fmt::Display for TwistGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.axis)
        } else {
            write!(f, "{}", self.axis)
        }
    }
}

/// A word in the twist generators, applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwistWord {
    pub letters: Vec<TwistGenerator>,
}

impl TwistWord {
    pub fn new(letters: Vec<TwistGenerator>) -> Self {
        Self { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word that undoes this one.
    pub fn inverse(&self) -> Self {
        Self::new(self.letters.iter().rev().map(|g| g.inverted()).collect())
    }

    pub fn concat(&self, other: &TwistWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self::new(letters)
    }

    /// Cancels adjacent inverse pairs.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<TwistGenerator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g.inverted()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for TwistWord {
    type Err = Error;

    /// Letters `X`, `Y`, `Z` (optionally `^-1` or `^1`), or lowercase `x`, `y`, `z`
    /// for inverses; separators are whitespace or commas and may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let (axis, inverse) = match c {
                ' ' | '\t' | ',' | '\n' | '\r' => continue,
                'X' => (Axis::X, false),
                'Y' => (Axis::Y, false),
                'Z' => (Axis::Z, false),
                'x' => (Axis::X, true),
                'y' => (Axis::Y, true),
                'z' => (Axis::Z, true),
                other => return Err(Error::Parse(format!("unexpected {other:?} in twist word"))),
            };
            let mut inverse = inverse;
            if chars.peek() == Some(&'^') {
                chars.next();
                let exponent: String = match chars.peek() {
                    Some('-') => {
                        chars.next();
                        "-".to_string()
                    }
                    _ => String::new(),
                };
                match (exponent.as_str(), chars.next()) {
                    ("-", Some('1')) => inverse = !inverse,
                    ("", Some('1')) => {}
                    _ => return Err(Error::Parse("exponent must be 1 or -1".into())),
                }
            }
            letters.push(TwistGenerator { axis, inverse });
        }
        Ok(Self::new(letters))
    }
}

/// Replaces coordinate `axis` by the other root of `kappa` viewed as a
/// quadratic in that coordinate: `t ↦ σ_t − (product of the other two) − t`.
pub fn vieta_involution<T: Field>(b: &BoundaryTraces<T>, p: &TracePoint<T>, axis: Axis) -> TracePoint<T> {
    let mut out = p.clone();
    vieta_in_place(b, &mut out, axis);
    out
}

fn vieta_in_place<T: Field>(b: &BoundaryTraces<T>, p: &mut TracePoint<T>, axis: Axis) {
    let (ua, va) = axis.others();
    let value = T::vieta_root(b.sigma(axis), p.get(ua), p.get(va), p.get(axis));
    p.set(axis, value);
}

/// Applies one generator. `τ_X` replaces `z` then `y`; `τ_Y` replaces `x` then
/// `z`; `τ_Z` replaces `y` then `x`. Inverses run the two steps in reverse order.
pub fn apply_generator<T: Field>(b: &BoundaryTraces<T>, p: &TracePoint<T>, g: TwistGenerator) -> TracePoint<T> {
    let (ua, va) = g.axis.others();
    let (first, second) = if g.inverse { (ua, va) } else { (va, ua) };
    let mut out = p.clone();
    vieta_in_place(b, &mut out, first);
    vieta_in_place(b, &mut out, second);
    out
}

pub fn apply_word<T: Field>(b: &BoundaryTraces<T>, p: &TracePoint<T>, w: &TwistWord) -> TracePoint<T> {
    w.letters.iter().fold(p.clone(), |acc, &g| apply_generator(b, &acc, g))
}

/// True when the twist along `axis` leaves `p` where it is.
pub fn is_fixed_point<T: Field>(b: &BoundaryTraces<T>, p: &TracePoint<T>, axis: Axis) -> bool {
    let image = apply_generator(b, p, TwistGenerator::forward(axis));
    let (ua, va) = axis.others();
    (image.get(ua).clone() - p.get(ua).clone()).near_zero(GEOMETRY_TOL)
        && (image.get(va).clone() - p.get(va).clone()).near_zero(GEOMETRY_TOL)
}

/// `2·acos(level/2)`, in (0, 2π) for `|level| < 2`.
pub fn rotation_angle(level: f64) -> Result<f64> {
    if !(level > -2.0 && level < 2.0) {
        return Err(Error::OutOfRange { what: "level", value: level.to_string() });
    }
    Ok(2.0 * (level / 2.0).acos())
}

/// Coordinates in which the twist along `axis` is a rotation about the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationFrame {
    pub axis: Axis,
    pub level: f64,
    pub u: f64,
    pub v: f64,
    pub radius: f64,
    /// In [0, 2π).
    pub angle: f64,
}

pub fn to_rotation_frame(b: &BoundaryTraces<f64>, p: &TracePoint<f64>, axis: Axis) -> Result<RotationFrame> {
    let level = *p.get(axis);
    let geom = level_set(b, axis, level)?;
    if geom.rhs < -GEOMETRY_TOL {
        return Err(Error::Degenerate(format!("level set {axis}({level}) is empty")));
    }
    let (a, c) = geom.plane_coords(p);
    let u = geom.weight_sum.sqrt() * (a + c - geom.center_sum);
    let v = geom.weight_diff.sqrt() * (a - c - geom.center_diff);
    Ok(RotationFrame {
        axis,
        level,
        u,
        v,
        radius: u.hypot(v),
        angle: v.atan2(u).rem_euclid(TAU),
    })
}

/// Angle swept by one forward twist, in [0, 2π).
pub fn angular_step(b: &BoundaryTraces<f64>, p: &TracePoint<f64>, axis: Axis) -> Result<f64> {
    let before = to_rotation_frame(b, p, axis)?;
    let after = to_rotation_frame(b, &apply_generator(b, p, TwistGenerator::forward(axis)), axis)?;
    Ok((after.angle - before.angle).rem_euclid(TAU))
}

/// Orientation of the forward twist in its rotation frame: `+1` when the
/// angle advances by `rotation_angle(level)`, `-1` when it retreats.
pub fn rotation_sign(b: &BoundaryTraces<f64>, p: &TracePoint<f64>, axis: Axis) -> Result<i8> {
    let theta = rotation_angle(*p.get(axis))?;
    let step = angular_step(b, p, axis)?;
    if angle_distance(step, theta) <= angle_distance(step, TAU - theta) {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// `|a − b|` measured on the circle.
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Rational};
    use std::f64::consts::PI;

    fn example5() -> BoundaryTraces<Rational> {
        BoundaryTraces::new(q(1, 1), q(1, 1), q(7, 4), q(-7, 4)).unwrap()
    }

    fn pt(x: Rational, y: Rational, z: Rational) -> TracePoint<Rational> {
        TracePoint::new(x, y, z)
    }

    #[test]
    fn generator_examples() {
        let b = example5();
        let p = pt(q(-1, 1), q(0, 1), q(0, 1));
        assert_eq!(apply_generator(&b, &p, TwistGenerator::forward(Axis::X)), p);
        let image = apply_generator(&b, &p, TwistGenerator::forward(Axis::Y));
        assert_eq!(image, pt(q(-17, 16), q(0, 1), q(0, 1)));
        for g in TwistGenerator::ALL {
            let there = apply_generator(&b, &p, g);
            assert_eq!(apply_generator(&b, &there, g.inverted()), p);
        }
    }

    #[test]
    fn matches_displayed_formulas() {
        let b = BoundaryTraces::new(q(1, 3), q(-1, 2), q(3, 4), q(5, 7)).unwrap();
        let (a, bb, c, d) = (b.a().clone(), b.b().clone(), b.c().clone(), b.d().clone());
        let p = pt(q(2, 3), q(-5, 4), q(7, 9));
        let (x, y, z) = (p.x.clone(), p.y.clone(), p.z.clone());

        let tx = apply_generator(&b, &p, TwistGenerator::forward(Axis::X));
        let z1 = a.clone() * c.clone() + bb.clone() * d.clone() - x.clone() * y.clone() - z.clone();
        let y1 = a.clone() * d.clone() + bb.clone() * c.clone() - x.clone() * z1.clone() - y.clone();
        assert_eq!(tx, pt(x.clone(), y1, z1));

        let ty = apply_generator(&b, &p, TwistGenerator::forward(Axis::Y));
        let x1 = bb.clone() * a.clone() + c.clone() * d.clone() - y.clone() * z.clone() - x.clone();
        let z1 = bb.clone() * d.clone() + c.clone() * a.clone() - y.clone() * x1.clone() - z.clone();
        assert_eq!(ty, pt(x1, y.clone(), z1));

        let tz = apply_generator(&b, &p, TwistGenerator::forward(Axis::Z));
        let y1 = c.clone() * bb.clone() + a.clone() * d.clone() - z.clone() * x.clone() - y.clone();
        let x1 = c.clone() * d.clone() + a.clone() * bb.clone() - z.clone() * y1.clone() - x.clone();
        assert_eq!(tz, pt(x1, y1, z));
    }

    #[test]
    fn word_examples() {
        let b = example5();
        let p = pt(q(-1, 1), q(0, 1), q(0, 1));
        assert_eq!(apply_word(&b, &p, &TwistWord::default()), p);
        let w: TwistWord = "Y".parse().unwrap();
        assert_eq!(apply_word(&b, &p, &w), pt(q(-17, 16), q(0, 1), q(0, 1)));
        let w: TwistWord = "Y Y".parse().unwrap();
        assert_eq!(apply_word(&b, &p, &w), p);
    }

    #[test]
    fn vieta_examples() {
        let b = example5();
        let p = pt(q(-1, 1), q(0, 1), q(0, 1));
        let image = vieta_involution(&b, &p, Axis::X);
        assert_eq!(image, pt(q(-17, 16), q(0, 1), q(0, 1)));
        assert_eq!(vieta_involution(&b, &image, Axis::X), p);

        let zero = BoundaryTraces::new(q(0, 1), q(0, 1), q(0, 1), q(0, 1)).unwrap();
        let p = pt(q(0, 1), q(0, 1), q(2, 1));
        assert_eq!(vieta_involution(&zero, &p, Axis::Z), pt(q(0, 1), q(0, 1), q(-2, 1)));
    }

    #[test]
    fn rotation_angle_examples() {
        assert!((rotation_angle(0.0).unwrap() - PI).abs() < 1e-15);
        assert!((rotation_angle(1.0).unwrap() - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!((rotation_angle(-1.0).unwrap() - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!(rotation_angle(2.0).is_err());
        assert!(rotation_angle(f64::NAN).is_err());
    }

    #[test]
    fn frame_on_markov_type_surface() {
        let b = BoundaryTraces::new(0.0, 0.0, 0.0, 0.0).unwrap();
        let mut p = TracePoint::new(0.0, 0.0, 2.0);
        let mut prev = to_rotation_frame(&b, &p, Axis::X).unwrap();
        assert!((prev.radius * prev.radius - 4.0).abs() < 1e-12);
        for _ in 0..2 {
            p = apply_generator(&b, &p, TwistGenerator::forward(Axis::X));
            let next = to_rotation_frame(&b, &p, Axis::X).unwrap();
            assert!((next.radius - prev.radius).abs() < 1e-12);
            assert!(angle_distance(next.angle - prev.angle, PI) < 1e-12);
            prev = next;
        }
    }

    #[test]
    fn fixed_point_has_zero_radius() {
        let b = BoundaryTraces::new(1.0, 1.0, 1.75, -1.75).unwrap();
        let p = TracePoint::new(-1.0, 0.0, 0.0);
        assert!(is_fixed_point(&b, &p, Axis::X));
        let f = to_rotation_frame(&b, &p, Axis::X).unwrap();
        assert!(f.radius < 1e-12);
        assert!(!is_fixed_point(&b, &p, Axis::Y));
    }

    #[test]
    fn word_parsing_and_reduction() {
        let w: TwistWord = "X Y^-1 z, Z^1".parse().unwrap();
        assert_eq!(w.to_string(), "X Y^-1 Z^-1 Z");
        assert_eq!(w.reduced().to_string(), "X Y^-1");
        assert_eq!(w.concat(&w.inverse()).reduced(), TwistWord::default());
        assert!("Q".parse::<TwistWord>().is_err());
        assert!("X^2".parse::<TwistWord>().is_err());
        assert!("X^".parse::<TwistWord>().is_err());
        assert_eq!("x^-1".parse::<TwistWord>().unwrap().to_string(), "X");
    }
}
