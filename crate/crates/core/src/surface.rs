//! Boundary data, the cubic surface in trace coordinates, and its level sets.
//!
//! With boundary traces `(a, b, c, d)` and interior traces `x = tr(AB)`,
//! `y = tr(BC)`, `z = tr(CA)`, the relative character variety is the zero set
//! of
//!
//! ```text
//! kappa = x² + y² + z² + xyz − σx·x − σy·y − σz·z + s
//! σx = ab + cd,  σy = ad + bc,  σz = ac + bd,  s = a² + b² + c² + d² + abcd − 4.
//! ```

use std::f64::consts::TAU;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, SURFACE_TOL};

/// One of the three interior trace coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// The other two coordinates in cyclic order: X → (y, z), Y → (z, x), Z → (x, y).
    pub fn others(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::Z, Axis::X),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "X",
            Axis::Y => "Y",
            Axis::Z => "Z",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_open_range<T: Field>(what: &'static str, v: &T) -> Result<()> {
    let two = T::from_i64(2);
    if *v > -two.clone() && *v < two {
        Ok(())
    } else {
        Err(Error::OutOfRange { what, value: v.to_string() })
    }
}

/// Boundary holonomy `(a, b, c, d)` together with its symmetric invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTraces<T> {
    a: T,
    b: T,
    c: T,
    d: T,
    sigma_x: T,
    sigma_y: T,
    sigma_z: T,
    s_const: T,
}

impl<T: Field> BoundaryTraces<T> {
    /// Builds boundary data; every trace must lie strictly inside (−2, 2).
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        check_open_range("a", &a)?;
        check_open_range("b", &b)?;
        check_open_range("c", &c)?;
        check_open_range("d", &d)?;
        let (sigma_x, sigma_y, sigma_z, s_const) = Self::invariants(&a, &b, &c, &d);
        Ok(Self { a, b, c, d, sigma_x, sigma_y, sigma_z, s_const })
    }

    pub fn from_array(v: [T; 4]) -> Result<Self> {
        let [a, b, c, d] = v;
        Self::new(a, b, c, d)
    }

    fn invariants(a: &T, b: &T, c: &T, d: &T) -> (T, T, T, T) {
        let sx = a.clone() * b.clone() + c.clone() * d.clone();
        let sy = a.clone() * d.clone() + b.clone() * c.clone();
        let sz = a.clone() * c.clone() + b.clone() * d.clone();
        let s = a.square() + b.square() + c.square() + d.square()
            + a.clone() * b.clone() * c.clone() * d.clone()
            - T::from_i64(4);
        (sx, sy, sz, s)
    }

    pub fn a(&self) -> &T {
        &self.a
    }
    pub fn b(&self) -> &T {
        &self.b
    }
    pub fn c(&self) -> &T {
        &self.c
    }
    pub fn d(&self) -> &T {
        &self.d
    }

    pub fn traces(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// σx = ab + cd.
    pub fn sigma_x(&self) -> &T {
        &self.sigma_x
    }
    /// σy = ad + bc.
    pub fn sigma_y(&self) -> &T {
        &self.sigma_y
    }
    /// σz = ac + bd.
    pub fn sigma_z(&self) -> &T {
        &self.sigma_z
    }
    /// a² + b² + c² + d² + abcd − 4.
    pub fn s_const(&self) -> &T {
        &self.s_const
    }

    pub fn sigma(&self, axis: Axis) -> &T {
        match axis {
            Axis::X => &self.sigma_x,
            Axis::Y => &self.sigma_y,
            Axis::Z => &self.sigma_z,
        }
    }

    /// The two boundary pairs whose products close up to the given curve:
    /// X = AB pairs (a, b) with (c, d), Y = BC pairs (b, c) with (a, d),
    /// Z = CA pairs (a, c) with (b, d).
    pub fn pairs(&self, axis: Axis) -> ((&T, &T), (&T, &T)) {
        match axis {
            Axis::X => ((&self.a, &self.b), (&self.c, &self.d)),
            Axis::Y => ((&self.b, &self.c), (&self.a, &self.d)),
            Axis::Z => ((&self.a, &self.c), (&self.b, &self.d)),
        }
    }

    /// True when the stored invariants equal their defining polynomials.
    pub fn invariants_consistent(&self) -> bool {
        let (sx, sy, sz, s) = Self::invariants(&self.a, &self.b, &self.c, &self.d);
        let ok = |lhs: &T, rhs: &T| (lhs.clone() - rhs.clone()).near_zero(0.0);
        ok(&sx, &self.sigma_x) && ok(&sy, &self.sigma_y) && ok(&sz, &self.sigma_z) && ok(&s, &self.s_const)
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Result<BoundaryTraces<U>> {
        BoundaryTraces::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

impl<T: Field> fmt::Display for BoundaryTraces<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// A point `(x, y, z)` in trace coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TracePoint<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Field> TracePoint<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn get(&self, axis: Axis) -> &T {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
        }
    }

    pub fn set(&mut self, axis: Axis, value: T) {
        match axis {
            Axis::X => self.x = value,
            Axis::Y => self.y = value,
            Axis::Z => self.z = value,
        }
    }

    /// Assembles a point from a level on `axis` and the other two
    /// coordinates in the cyclic order of [`Axis::others`].
    pub fn from_axis(axis: Axis, level: T, u: T, v: T) -> Self {
        match axis {
            Axis::X => Self::new(level, u, v),
            Axis::Y => Self::new(v, level, u),
            Axis::Z => Self::new(u, v, level),
        }
    }

    pub fn to_f64(&self) -> TracePoint<f64> {
        TracePoint::new(self.x.to_f64(), self.y.to_f64(), self.z.to_f64())
    }

    pub fn key(&self, quantum: f64) -> (T::Key, T::Key, T::Key) {
        (self.x.key(quantum), self.y.key(quantum), self.z.key(quantum))
    }
}

impl<T: Field> fmt::Display for TracePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// The defining polynomial of the relative character variety at `p`.
pub fn kappa<T: Field>(b: &BoundaryTraces<T>, p: &TracePoint<T>) -> T {
    let TracePoint { x, y, z } = p;
    x.square() + y.square() + z.square() + x.clone() * y.clone() * z.clone()
        - b.sigma_x.clone() * x.clone()
        - b.sigma_y.clone() * y.clone()
        - b.sigma_z.clone() * z.clone()
        + b.s_const.clone()
}

/// Membership test: exact zero in exact mode, `|kappa| <= 1e-9` in float mode.
pub fn on_surface<T: Field>(b: &BoundaryTraces<T>, p: &TracePoint<T>) -> bool {
    kappa(b, p).near_zero(SURFACE_TOL)
}

/// `[I⁻, I⁺]` for a trace pair `(u, v)`: the roots of `t² − uvt + u² + v² − 4`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairInterval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Field> PairInterval<T> {
    pub fn new(u: &T, v: &T) -> Result<Self> {
        let four = T::from_i64(4);
        let radicand = (u.square() - four.clone()) * (v.square() - four);
        let root = radicand.sqrt()?;
        let uv = u.clone() * v.clone();
        let two = T::from_i64(2);
        Ok(Self {
            lo: (uv.clone() - root.clone()) / two.clone(),
            hi: (uv + root) / two,
        })
    }

    pub fn contains_interior(&self, t: &T) -> bool {
        *t > self.lo && *t < self.hi
    }
}

/// `t² − uvt + u² + v² − 4`, negative exactly on the interior of the pair interval.
pub fn pair_quadratic<T: Field>(u: &T, v: &T, t: &T) -> T {
    t.square() - u.clone() * v.clone() * t.clone() + u.square() + v.square() - T::from_i64(4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentClass {
    Su2,
    Sl2rCompact,
    Degenerate,
}

impl ComponentClass {
    pub fn name(self) -> &'static str {
        match self {
            ComponentClass::Su2 => "SU2",
            ComponentClass::Sl2rCompact => "SL2R_compact",
            ComponentClass::Degenerate => "Degenerate",
        }
    }
}

/// Component type and the open range `S = (lo, hi)` of the chosen coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct Classification<T> {
    pub class: ComponentClass,
    pub axis: Axis,
    pub first: PairInterval<T>,
    pub second: PairInterval<T>,
    pub lo: T,
    pub hi: T,
}

impl<T: Field> Classification<T> {
    pub fn is_degenerate(&self) -> bool {
        self.class == ComponentClass::Degenerate
    }

    pub fn contains(&self, t: &T) -> bool {
        *t > self.lo && *t < self.hi
    }
}

/// Classifies the compact component through the x-coordinate.
pub fn classify<T: Field>(b: &BoundaryTraces<T>) -> Result<Classification<T>> {
    classify_along(b, Axis::X)
}

/// Classification read off along any axis; the component type agrees for all three.
///
/// Exact mode fails with [`Error::NeedsFloat`] when an interval endpoint is irrational.
pub fn classify_along<T: Field>(b: &BoundaryTraces<T>, axis: Axis) -> Result<Classification<T>> {
    let ((u1, v1), (u2, v2)) = b.pairs(axis);
    let first = PairInterval::new(u1, v1)?;
    let second = PairInterval::new(u2, v2)?;
    let max_lo = if first.lo > second.lo { first.lo.clone() } else { second.lo.clone() };
    let min_hi = if first.hi < second.hi { first.hi.clone() } else { second.hi.clone() };
    let width = min_hi.clone() - max_lo.clone();
    let (class, lo, hi) = if width.near_zero(SURFACE_TOL) {
        (ComponentClass::Degenerate, max_lo.clone(), max_lo)
    } else if width.is_positive() {
        (ComponentClass::Su2, max_lo, min_hi)
    } else {
        (ComponentClass::Sl2rCompact, min_hi, max_lo)
    };
    Ok(Classification { class, axis, first, second, lo, hi })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelShape {
    Ellipse,
    Point,
    Empty,
}

/// Normal form of a level set: with `(u, v)` the other two coordinates,
///
/// ```text
/// weight_sum·((u+v) − center_sum)² + weight_diff·((u−v) − center_diff)² = rhs
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSetGeometry<T> {
    pub axis: Axis,
    pub level: T,
    pub center_sum: T,
    pub center_diff: T,
    pub weight_sum: T,
    pub weight_diff: T,
    pub rhs: T,
}

impl<T: Field> LevelSetGeometry<T> {
    pub fn shape(&self) -> LevelShape {
        if self.rhs.near_zero(SURFACE_TOL) {
            LevelShape::Point
        } else if self.rhs.is_positive() {
            LevelShape::Ellipse
        } else {
            LevelShape::Empty
        }
    }

    /// The other two coordinates of `p`, in cyclic order.
    pub fn plane_coords<'a>(&self, p: &'a TracePoint<T>) -> (&'a T, &'a T) {
        let (ua, va) = self.axis.others();
        (p.get(ua), p.get(va))
    }

    /// Left side minus right side of the normal form at `p` (ignores `p`'s own level).
    pub fn residual(&self, p: &TracePoint<T>) -> T {
        let (u, v) = self.plane_coords(p);
        let s = u.clone() + v.clone() - self.center_sum.clone();
        let dd = u.clone() - v.clone() - self.center_diff.clone();
        self.weight_sum.clone() * s.square() + self.weight_diff.clone() * dd.square() - self.rhs.clone()
    }
}

/// Level set of `axis` at `level`, for `|level| < 2`.
pub fn level_set<T: Field>(b: &BoundaryTraces<T>, axis: Axis, level: T) -> Result<LevelSetGeometry<T>> {
    check_open_range("level", &level)?;
    let two = T::from_i64(2);
    let four = T::from_i64(4);
    let (ua, va) = axis.others();
    let (su, sv) = (b.sigma(ua).clone(), b.sigma(va).clone());
    let ((p1, q1), (p2, q2)) = b.pairs(axis);
    let plus = two.clone() + level.clone();
    let minus = two - level.clone();
    let rhs = pair_quadratic(p1, q1, &level) * pair_quadratic(p2, q2, &level)
        / (four.clone() - level.square());
    Ok(LevelSetGeometry {
        axis,
        center_sum: (su.clone() + sv.clone()) / plus.clone(),
        center_diff: (su - sv) / minus.clone(),
        weight_sum: plus / four.clone(),
        weight_diff: minus / four,
        rhs,
        level,
    })
}

/// Solves `kappa = 0` for `z` given `x` and `y`.
///
/// Returns no points when the discriminant is negative and a single point for a
/// double root. Exact mode reports [`Error::NeedsFloat`] for irrational roots.
pub fn lift_to_surface<T: Field>(b: &BoundaryTraces<T>, x: T, y: T) -> Result<Vec<TracePoint<T>>> {
    let linear = x.clone() * y.clone() - b.sigma_z.clone();
    let constant = x.square() + y.square() - b.sigma_x.clone() * x.clone() - b.sigma_y.clone() * y.clone()
        + b.s_const.clone();
    let disc = linear.square() - T::from_i64(4) * constant;
    let two = T::from_i64(2);
    if disc.near_zero(1e-15) {
        let z = -linear / two;
        return Ok(vec![TracePoint::new(x, y, z)]);
    }
    if disc.is_negative() {
        return Ok(Vec::new());
    }
    let root = disc.sqrt()?;
    let z1 = (-linear.clone() - root.clone()) / two.clone();
    let z2 = (-linear + root) / two;
    Ok(vec![TracePoint::new(x.clone(), y.clone(), z1), TracePoint::new(x, y, z2)])
}

/// Point on the level set at frame angle `phi` (float mode).
pub(crate) fn ellipse_point(geom: &LevelSetGeometry<f64>, phi: f64) -> TracePoint<f64> {
    let r = geom.rhs.max(0.0).sqrt();
    let s = geom.center_sum + r * phi.cos() / geom.weight_sum.sqrt();
    let d = geom.center_diff + r * phi.sin() / geom.weight_diff.sqrt();
    TracePoint::from_axis(geom.axis, geom.level, (s + d) / 2.0, (s - d) / 2.0)
}

/// `m` levels spread over the interior of S, `k` equally spaced frame angles on each.
pub fn surface_sample(b: &BoundaryTraces<f64>, m: usize, k: usize) -> Result<Vec<TracePoint<f64>>> {
    surface_sample_along(b, Axis::X, m, k)
}

pub fn surface_sample_along(
    b: &BoundaryTraces<f64>,
    axis: Axis,
    m: usize,
    k: usize,
) -> Result<Vec<TracePoint<f64>>> {
    let class = classify_along(b, axis)?;
    if class.is_degenerate() {
        return Err(Error::Degenerate("intervals touch; S is empty".into()));
    }
    let mut out = Vec::with_capacity(m * k);
    for i in 0..m {
        let level = class.lo + (i as f64 + 0.5) * (class.hi - class.lo) / m as f64;
        let geom = level_set(b, axis, level)?;
        for j in 0..k {
            out.push(ellipse_point(&geom, TAU * j as f64 / k as f64));
        }
    }
    Ok(out)
}
