//! Orbits of the twist group: enumeration, periods, ε-density, and the
//! minimality and exceptional-orbit criteria.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::f64::consts::{PI, TAU};

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::AngleFraction;
use crate::error::{Error, Result};
use crate::rep::{is_in_f, is_niven_level};
use crate::scalar::{q, Field, Rational, GEOMETRY_TOL, SURFACE_TOL};
use crate::surface::{
    classify_along, ellipse_point, level_set, surface_sample, Axis, BoundaryTraces, LevelShape, TracePoint,
};
use crate::twists::{apply_generator, is_fixed_point, TwistGenerator, TwistWord};

/// Default grid spacing for deduplicating float-mode orbit points.
pub const FLOAT_DEDUP_QUANTUM: f64 = 1e-9;

/// Largest denominator searched when recognising float levels as `2cos(πp/q)`.
pub const DEFAULT_MAX_Q: i64 = 64;

/// `max(|x₁ − x₂|, |y₁ − y₂|, |z₁ − z₂|)`.
pub fn box_distance<T: Field>(p1: &TracePoint<T>, p2: &TracePoint<T>) -> T {
    let dx = (p1.x.clone() - p2.x.clone()).abs();
    let dy = (p1.y.clone() - p2.y.clone()).abs();
    let dz = (p1.z.clone() - p2.z.clone()).abs();
    let m = if dx > dy { dx } else { dy };
    if m > dz {
        m
    } else {
        dz
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitStatus {
    /// Closure under all six generators, certified exactly.
    Finite(usize),
    /// Closure reached in float mode, up to the deduplication quantum.
    Closed(usize),
    /// The point budget ran out first.
    Truncated(usize),
}

impl OrbitStatus {
    pub fn name(self) -> &'static str {
        match self {
            OrbitStatus::Finite(_) => "Finite",
            OrbitStatus::Closed(_) => "Closed",
            OrbitStatus::Truncated(_) => "Truncated",
        }
    }

    pub fn count(self) -> usize {
        match self {
            OrbitStatus::Finite(n) | OrbitStatus::Closed(n) | OrbitStatus::Truncated(n) => n,
        }
    }

    pub fn is_truncated(self) -> bool {
        matches!(self, OrbitStatus::Truncated(_))
    }
}

#[derive(Debug, Clone)]
pub struct OrbitResult<T> {
    /// In discovery (breadth-first) order.
    pub points: Vec<TracePoint<T>>,
    pub status: OrbitStatus,
    /// Word reaching each point from the start, when requested.
    pub generating_words: Option<Vec<TwistWord>>,
}

#[derive(Debug, Clone, Copy)]
pub struct OrbitOptions {
    pub budget: usize,
    pub quantum: f64,
    pub record_words: bool,
}

impl OrbitOptions {
    pub fn with_budget(budget: usize) -> Self {
        Self { budget, quantum: FLOAT_DEDUP_QUANTUM, record_words: false }
    }
}

/// Breadth-first closure of `p0` under the six generators, holding at most
/// `budget` points.
pub fn enumerate_orbit<T: Field>(b: &BoundaryTraces<T>, p0: &TracePoint<T>, budget: usize) -> Result<OrbitResult<T>> {
    enumerate_orbit_with(b, p0, OrbitOptions::with_budget(budget))
}

pub fn enumerate_orbit_with<T: Field>(
    b: &BoundaryTraces<T>,
    p0: &TracePoint<T>,
    opts: OrbitOptions,
) -> Result<OrbitResult<T>> {
    if opts.budget == 0 {
        return Err(Error::InvalidBudget);
    }
    let mut seen = HashSet::new();
    let mut points = vec![p0.clone()];
    let mut words = opts.record_words.then(|| vec![TwistWord::default()]);
    let mut queue = VecDeque::from([0usize]);
    seen.insert(p0.key(opts.quantum));

    while let Some(i) = queue.pop_front() {
        for g in TwistGenerator::ALL {
            let image = apply_generator(b, &points[i], g);
            let key = image.key(opts.quantum);
            if seen.contains(&key) {
                continue;
            }
            if points.len() >= opts.budget {
                let n = points.len();
                return Ok(OrbitResult { points, status: OrbitStatus::Truncated(n), generating_words: words });
            }
            seen.insert(key);
            if let Some(ws) = words.as_mut() {
                let mut w = ws[i].clone();
                w.letters.push(g);
                ws.push(w);
            }
            queue.push_back(points.len());
            points.push(image);
        }
    }
    let n = points.len();
    let status = match T::MODE {
        crate::scalar::Mode::Exact => OrbitStatus::Finite(n),
        crate::scalar::Mode::Float => OrbitStatus::Closed(n),
    };
    Ok(OrbitResult { points, status, generating_words: words })
}

/// Re-checks that every generator maps the set into itself.
pub fn is_closed<T: Field>(b: &BoundaryTraces<T>, points: &[TracePoint<T>], quantum: f64) -> bool {
    let keys: HashSet<_> = points.iter().map(|p| p.key(quantum)).collect();
    points
        .iter()
        .all(|p| TwistGenerator::ALL.iter().all(|&g| keys.contains(&apply_generator(b, p, g).key(quantum))))
}

/// `Yₙ = {2cos(πp/q) : q ≤ n, 0 < p < q, gcd(p, q) = 1}`, indexed by angle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationLevel {
    pub n: i64,
    pub elements: BTreeSet<AngleFraction>,
}

impl FiltrationLevel {
    /// Trace values in decreasing order (increasing angle).
    pub fn values(&self) -> Vec<f64> {
        self.elements.iter().map(|a| a.trace_level()).collect()
    }

    pub fn contains(&self, a: AngleFraction) -> bool {
        self.elements.contains(&a.folded())
    }
}

pub fn filtration(n: i64) -> Result<FiltrationLevel> {
    if n < 2 {
        return Err(Error::Invalid(format!("filtration index must be at least 2, got {n}")));
    }
    let mut elements = BTreeSet::new();
    for qd in 2..=n {
        for p in 1..qd {
            if p.gcd(&qd) == 1 {
                elements.insert(AngleFraction::new(p, qd)?);
            }
        }
    }
    Ok(FiltrationLevel { n, elements })
}

/// A trace level together with what we know about where it came from.
#[derive(Debug, Clone, PartialEq)]
pub enum LevelValue {
    Exact(Rational),
    Float(f64),
    /// `2cos(πp/q)` for a known angle.
    Cosine(AngleFraction),
}

impl LevelValue {
    pub fn from_field<T: Field>(t: &T) -> Self {
        match t.as_rational() {
            Some(r) => LevelValue::Exact(r.clone()),
            None => LevelValue::Float(t.to_f64()),
        }
    }
}

/// Recognises `level = 2cos(πp/q)` with `0 < p/q < 1`.
///
/// Exact rationals hit only at `0, ±1`; float levels match the smallest `q ≤ max_q`
/// within `1e-9`.
pub fn rational_angle_of(level: &LevelValue, max_q: i64) -> Option<AngleFraction> {
    match level {
        LevelValue::Exact(r) => {
            let two = q(2, 1);
            if !(*r > -two.clone() && *r < two) || !is_niven_level(r) {
                return None;
            }
            if r.is_zero() {
                AngleFraction::new(1, 2).ok()
            } else if *r > Rational::zero() {
                AngleFraction::new(1, 3).ok()
            } else {
                AngleFraction::new(2, 3).ok()
            }
        }
        LevelValue::Cosine(a) => {
            let f = a.folded();
            (f.p() != 0 && f.p() != f.q()).then_some(f)
        }
        LevelValue::Float(x) => {
            if !(*x > -2.0 && *x < 2.0) {
                return None;
            }
            for qd in 2..=max_q {
                // Nearest numerator for this denominator, then its neighbours.
                let guess = ((x / 2.0).acos() / PI * qd as f64).round() as i64;
                for p in (guess - 1)..=(guess + 1) {
                    if p <= 0 || p >= qd || p.gcd(&qd) != 1 {
                        continue;
                    }
                    let a = AngleFraction::new(p, qd).ok()?;
                    if (a.trace_level() - x).abs() <= SURFACE_TOL {
                        return Some(a);
                    }
                }
            }
            None
        }
    }
}

/// Order of the twist along `axis` at `p`, or `None` for an irrational rotation.
///
/// The claimed order is confirmed by iterating the twist (exactly in exact mode,
/// within `1e-8` in float mode).
pub fn twist_period<T: Field>(b: &BoundaryTraces<T>, p: &TracePoint<T>, axis: Axis) -> Result<Option<u64>> {
    twist_period_with(b, p, axis, &LevelValue::from_field(p.get(axis)), DEFAULT_MAX_Q)
}

/// As [`twist_period`], with the level's provenance supplied by the caller.
pub fn twist_period_with<T: Field>(
    b: &BoundaryTraces<T>,
    p: &TracePoint<T>,
    axis: Axis,
    level: &LevelValue,
    max_q: i64,
) -> Result<Option<u64>> {
    if is_fixed_point(b, p, axis) {
        return Err(Error::FixedPoint(axis.name()));
    }
    let Some(angle) = rational_angle_of(level, max_q) else {
        return Ok(None);
    };
    let order = angle.rotation_order().ok_or(Error::FixedPoint(axis.name()))?;
    let g = TwistGenerator::forward(axis);
    let mut cur = p.clone();
    for _ in 0..order {
        cur = apply_generator(b, &cur, g);
    }
    if !box_distance(&cur, p).near_zero(GEOMETRY_TOL) {
        return Err(Error::PeriodMismatch { expected: order });
    }
    Ok(Some(order))
}

/// Grid of points on a nondegenerate level set with consecutive box distance
/// at most `step`.
pub fn level_set_grid(b: &BoundaryTraces<f64>, axis: Axis, level: f64, step: f64) -> Result<Vec<TracePoint<f64>>> {
    let geom = level_set(b, axis, level)?;
    if geom.shape() != LevelShape::Ellipse {
        return Err(Error::Degenerate(format!("level set {axis}({level}) is not an ellipse")));
    }
    let mut m = 16usize;
    loop {
        let pts: Vec<_> = (0..m).map(|j| ellipse_point(&geom, TAU * j as f64 / m as f64)).collect();
        let worst = (0..m).map(|j| box_distance(&pts[j], &pts[(j + 1) % m])).fold(0.0, f64::max);
        if worst <= step || m >= 1 << 22 {
            return Ok(pts);
        }
        m *= 2;
    }
}

/// Whether `orbit` is ε-dense in the level set: every point of a reference grid
/// (spacing ≤ ε/4) has an orbit point at box distance strictly between 0 and ε.
pub fn epsilon_density_on_level(
    b: &BoundaryTraces<f64>,
    orbit: &[TracePoint<f64>],
    axis: Axis,
    level: f64,
    eps: f64,
) -> Result<bool> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::Invalid("eps must be positive".into()));
    }
    let grid = level_set_grid(b, axis, level, eps / 4.0)?;
    Ok(grid.iter().all(|g| {
        orbit.iter().any(|o| {
            let d = box_distance(g, o);
            d > 0.0 && d < eps
        })
    }))
}

/// Upper bound on `semi-major axis × 2π` over all level sets of the compact
/// component, in the box metric.
///
/// Each level set lies in the box spanned by the ranges of the other two
/// coordinates, so its semi-major axis is at most half that box's diagonal.
/// An arc of frame angle δ then has length at most `semi-major · δ`.
pub fn circumference_bound<T: Field>(b: &BoundaryTraces<T>) -> Result<f64> {
    let bf = b.map(|t| t.to_f64())?;
    let mut widths = [4.0f64; 3];
    for (i, axis) in Axis::ALL.into_iter().enumerate() {
        let c = classify_along(&bf, axis)?;
        if !c.is_degenerate() {
            widths[i] = (c.hi - c.lo).clamp(0.0, 4.0);
        }
    }
    let half_diag = |i: usize, j: usize| 0.5 * widths[i].hypot(widths[j]);
    Ok(TAU * half_diag(1, 2).max(half_diag(2, 0)).max(half_diag(0, 1)))
}

/// `N(ε) = ⌈C/ε⌉ + 1` with `C` from [`circumference_bound`]: any twist of
/// order `q > N(ε)` has ε-dense orbits on its (nondegenerate) level set.
pub fn n_of_epsilon<T: Field>(b: &BoundaryTraces<T>, eps: f64) -> Result<u64> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::Invalid("eps must be positive".into()));
    }
    let c = circumference_bound(b)?;
    Ok((c / eps).ceil() as u64 + 1)
}

/// At least two of σx, σy, σz are rational non-integers (exact mode only).
pub fn minimality_criterion<T: Field>(b: &BoundaryTraces<T>) -> Result<bool> {
    let mut count = 0;
    for axis in Axis::ALL {
        let s = b.sigma(axis).as_rational().ok_or(Error::FloatMode)?;
        if !s.is_integer() {
            count += 1;
        }
    }
    Ok(count >= 2)
}

#[derive(Debug, Clone)]
pub struct ExceptionalFamily {
    pub traces: BoundaryTraces<Rational>,
    /// `{(a² − 2, 0, 0), (2 − c², 0, 0)}`.
    pub special_orbit: Vec<TracePoint<Rational>>,
}

/// Boundary data `(a, a, c, −c)` and its two-point invariant orbit, after checking
/// membership in the family and closure of the orbit under every generator.
pub fn exceptional_family(a: &Rational, c: &Rational) -> Result<ExceptionalFamily> {
    if !is_in_f(a, c)? {
        return Err(Error::Condition(format!(
            "({}, {}) is not in the exceptional family",
            crate::scalar::format_rational(a),
            crate::scalar::format_rational(c)
        )));
    }
    let traces = BoundaryTraces::new(a.clone(), a.clone(), c.clone(), -c.clone())?;
    let zero = Rational::zero();
    let two = q(2, 1);
    let first = TracePoint::new(a * a - two.clone(), zero.clone(), zero.clone());
    let second = TracePoint::new(two - c * c, zero.clone(), zero);
    let orbit = enumerate_orbit(&traces, &first, 100)?;
    let expected: HashSet<_> = [first.clone(), second.clone()].into_iter().collect();
    let found: HashSet<_> = orbit.points.iter().cloned().collect();
    if orbit.status != OrbitStatus::Finite(2) || found != expected {
        return Err(Error::Condition("special orbit is not invariant".into()));
    }
    Ok(ExceptionalFamily { traces, special_orbit: vec![first, second] })
}

#[derive(Debug, Clone)]
pub struct DensityOptions {
    pub eps: f64,
    /// Number of orbit points generated by the random walk.
    pub budget: usize,
    pub seed: u64,
    /// Levels and angles of the reference sample.
    pub grid_levels: usize,
    pub grid_angles: usize,
}

impl DensityOptions {
    pub fn new(eps: f64, budget: usize) -> Self {
        Self { eps, budget, seed: 0x5eed, grid_levels: 24, grid_angles: 24 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityReport {
    pub covered_fraction: f64,
    /// Reference points within ε of the orbit, out of `grid_points`.
    pub covered: usize,
    /// False when the orbit closed up as a finite set before the walk.
    pub truncated: bool,
    pub orbit_points: usize,
    pub grid_points: usize,
}

/// Size of the breadth-first probe run before the random walk.
const FINITE_PROBE: usize = 4096;

/// Fraction of the reference sample lying within ε (box metric) of the orbit of `p0`.
///
/// Orbits that close within a small breadth-first probe are used as-is;
/// otherwise `budget` points are produced by a seeded walk that alternates
/// `τ_X`, `τ_Y` and mixes in uniformly random generators.
pub fn density_scan(b: &BoundaryTraces<f64>, p0: &TracePoint<f64>, opts: &DensityOptions) -> Result<DensityReport> {
    if opts.eps.is_nan() || opts.eps <= 0.0 {
        return Err(Error::Invalid("eps must be positive".into()));
    }
    if opts.budget == 0 {
        return Err(Error::InvalidBudget);
    }
    let grid = surface_sample(b, opts.grid_levels, opts.grid_angles)?;
    let probe = enumerate_orbit(b, p0, FINITE_PROBE)?;
    let (orbit, truncated) = if probe.status.is_truncated() {
        (orbit_walk(b, p0, opts.budget, opts.seed), true)
    } else {
        (probe.points, false)
    };
    let index = CellIndex::new(&orbit, opts.eps);
    let covered = grid.iter().filter(|g| index.has_within(g, opts.eps)).count();
    Ok(DensityReport {
        covered_fraction: if grid.is_empty() { 1.0 } else { covered as f64 / grid.len() as f64 },
        covered,
        truncated,
        orbit_points: orbit.len(),
        grid_points: grid.len(),
    })
}

/// Seeded walk: the point after each step is recorded, `budget` points in all.
pub fn orbit_walk(b: &BoundaryTraces<f64>, p0: &TracePoint<f64>, budget: usize, seed: u64) -> Vec<TracePoint<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(budget);
    let mut cur = p0.clone();
    let mut alternate = Axis::X;
    out.push(cur.clone());
    while out.len() < budget {
        let g = if rng.gen_bool(0.5) {
            let g = TwistGenerator::forward(alternate);
            alternate = if alternate == Axis::X { Axis::Y } else { Axis::X };
            g
        } else {
            TwistGenerator::ALL[rng.gen_range(0..6)]
        };
        cur = apply_generator(b, &cur, g);
        out.push(cur.clone());
    }
    out
}

/// Uniform-cell spatial index for box-metric neighbourhood queries.
struct CellIndex<'a> {
    cell: f64,
    cells: HashMap<(i64, i64, i64), Vec<&'a TracePoint<f64>>>,
}

impl<'a> CellIndex<'a> {
    fn new(points: &'a [TracePoint<f64>], cell: f64) -> Self {
        let mut cells: HashMap<_, Vec<_>> = HashMap::new();
        for p in points {
            cells.entry(Self::key(p, cell)).or_default().push(p);
        }
        Self { cell, cells }
    }

    fn key(p: &TracePoint<f64>, cell: f64) -> (i64, i64, i64) {
        ((p.x / cell).floor() as i64, (p.y / cell).floor() as i64, (p.z / cell).floor() as i64)
    }

    fn has_within(&self, p: &TracePoint<f64>, eps: f64) -> bool {
        let (i, j, k) = Self::key(p, self.cell);
        for di in -1..=1 {
            for dj in -1..=1 {
                for dk in -1..=1 {
                    if let Some(v) = self.cells.get(&(i + di, j + dj, k + dk)) {
                        if v.iter().any(|o| box_distance(p, o) < eps) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example5() -> BoundaryTraces<Rational> {
        BoundaryTraces::new(q(1, 1), q(1, 1), q(7, 4), q(-7, 4)).unwrap()
    }

    fn pt(x: Rational, y: Rational, z: Rational) -> TracePoint<Rational> {
        TracePoint::new(x, y, z)
    }

    #[test]
    fn box_distance_examples() {
        let o = pt(q(0, 1), q(0, 1), q(0, 1));
        assert_eq!(box_distance(&o, &o), q(0, 1));
        assert_eq!(box_distance(&pt(q(-1, 1), q(0, 1), q(0, 1)), &pt(q(-17, 16), q(0, 1), q(0, 1))), q(1, 16));
        assert_eq!(box_distance(&pt(q(1, 1), q(2, 1), q(3, 1)), &o), q(3, 1));
    }

    #[test]
    fn special_orbit_is_finite() {
        let r = enumerate_orbit(&example5(), &pt(q(-1, 1), q(0, 1), q(0, 1)), 10_000).unwrap();
        assert_eq!(r.status, OrbitStatus::Finite(2));
        assert_eq!(r.points, vec![pt(q(-1, 1), q(0, 1), q(0, 1)), pt(q(-17, 16), q(0, 1), q(0, 1))]);
        assert!(is_closed(&example5(), &r.points, 0.0));
    }

    #[test]
    fn global_fixed_point() {
        // With zero boundary traces each Vieta move fixes points with 2x = −yz.
        let z = BoundaryTraces::new(q(0, 1), q(0, 1), q(0, 1), q(0, 1)).unwrap();
        let p = pt(q(-2, 1), q(-2, 1), q(-2, 1));
        assert!(crate::surface::on_surface(&z, &p));
        let r = enumerate_orbit(&z, &p, 10).unwrap();
        assert_eq!(r.status, OrbitStatus::Finite(1));
    }

    #[test]
    fn budget_is_checked() {
        assert!(matches!(
            enumerate_orbit(&example5(), &pt(q(-1, 1), q(0, 1), q(0, 1)), 0),
            Err(Error::InvalidBudget)
        ));
        let r = enumerate_orbit(&example5(), &pt(q(-1, 1), q(0, 1), q(0, 1)), 1).unwrap();
        assert_eq!(r.status, OrbitStatus::Truncated(1));
    }

    #[test]
    fn words_reach_their_points() {
        let b = BoundaryTraces::new(q(1, 2), q(1, 2), q(1, 2), q(1, 3)).unwrap();
        let p0 = pt(q(0, 1), q(1, 3), q(-1, 5));
        let opts = OrbitOptions { budget: 50, quantum: 0.0, record_words: true };
        let r = enumerate_orbit_with(&b, &p0, opts).unwrap();
        assert_eq!(r.status, OrbitStatus::Truncated(50));
        let words = r.generating_words.unwrap();
        for (p, w) in r.points.iter().zip(&words) {
            assert_eq!(&crate::twists::apply_word(&b, &p0, w), p);
        }
    }

    #[test]
    fn filtration_examples() {
        let vals = |n| filtration(n).unwrap().values();
        assert_eq!(filtration(2).unwrap().elements, BTreeSet::from([AngleFraction::new(1, 2).unwrap()]));
        let y4 = vals(4);
        let expect = [2f64.sqrt(), 1.0, 0.0, -1.0, -(2f64.sqrt())];
        assert_eq!(y4.len(), expect.len());
        for (a, e) in y4.iter().zip(expect) {
            assert!((a - e).abs() < 1e-12);
        }
        assert_eq!(vals(5).len(), 9);
        assert!(filtration(1).is_err());
    }

    #[test]
    fn rational_angle_examples() {
        assert_eq!(rational_angle_of(&LevelValue::Exact(q(1, 1)), 10), Some(AngleFraction::new(1, 3).unwrap()));
        assert_eq!(rational_angle_of(&LevelValue::Exact(q(7, 4)), 10), None);
        let a = AngleFraction::new(1, 4).unwrap();
        assert_eq!(rational_angle_of(&LevelValue::Cosine(a), 10), Some(a));
        assert_eq!(rational_angle_of(&LevelValue::Float(2f64.sqrt()), 10), Some(a));
        assert_eq!(rational_angle_of(&LevelValue::Float(0.123), 10), None);
        assert_eq!(rational_angle_of(&LevelValue::Exact(q(2, 1)), 10), None);
    }

    #[test]
    fn period_examples() {
        let b = BoundaryTraces::new(q(1, 3), q(-1, 2), q(3, 4), q(5, 7)).unwrap();
        let p = pt(q(1, 2), q(1, 1), q(-2, 3));
        assert_eq!(twist_period(&b, &p, Axis::Y).unwrap(), Some(3));
        let p = pt(q(1, 2), q(0, 1), q(-2, 3));
        assert_eq!(twist_period(&b, &p, Axis::Y).unwrap(), Some(2));
        let p = pt(q(1, 2), q(3, 5), q(-2, 3));
        assert_eq!(twist_period(&b, &p, Axis::Y).unwrap(), None);

        let bf = b.map(|t| t.to_f64()).unwrap();
        let p = TracePoint::new(0.5, 2f64.sqrt(), -0.7);
        assert_eq!(twist_period(&bf, &p, Axis::Y).unwrap(), Some(4));
    }

    #[test]
    fn fixed_point_period_is_an_error() {
        let b = example5();
        let p = pt(q(-1, 1), q(0, 1), q(0, 1));
        assert!(matches!(twist_period(&b, &p, Axis::X), Err(Error::FixedPoint("X"))));
    }

    #[test]
    fn minimality_examples() {
        let b = BoundaryTraces::new(q(1, 2), q(1, 2), q(1, 2), q(1, 3)).unwrap();
        assert_eq!(b.sigma_x(), &q(5, 12));
        assert_eq!(b.sigma_z(), &q(5, 12));
        assert!(minimality_criterion(&b).unwrap());
        let one = BoundaryTraces::new(q(1, 1), q(1, 1), q(1, 1), q(1, 1)).unwrap();
        assert!(!minimality_criterion(&one).unwrap());
        let zero = BoundaryTraces::new(q(0, 1), q(0, 1), q(0, 1), q(0, 1)).unwrap();
        assert!(!minimality_criterion(&zero).unwrap());
        let f = BoundaryTraces::new(0.5, 0.5, 0.5, 0.25).unwrap();
        assert!(matches!(minimality_criterion(&f), Err(Error::FloatMode)));
    }

    #[test]
    fn exceptional_family_examples() {
        let fam = exceptional_family(&q(1, 1), &q(7, 4)).unwrap();
        assert_eq!(fam.traces, example5());
        assert_eq!(fam.special_orbit, vec![pt(q(-1, 1), q(0, 1), q(0, 1)), pt(q(-17, 16), q(0, 1), q(0, 1))]);
        assert!(exceptional_family(&q(1, 1), &q(1, 1)).is_err());
        assert!(exceptional_family(&q(5, 4), &q(5, 4)).is_err());
        assert!(exceptional_family(&q(3, 2), &q(3, 2)).is_ok());
    }

    #[test]
    fn n_of_epsilon_examples() {
        let z = BoundaryTraces::new(0.0, 0.0, 0.0, 0.0).unwrap();
        let c = circumference_bound(&z).unwrap();
        assert!((c - 4.0 * 2f64.sqrt() * PI).abs() < 1e-12);
        assert_eq!(n_of_epsilon(&z, 100.0).unwrap(), 2);
        let n1 = n_of_epsilon(&z, 0.1).unwrap();
        let n2 = n_of_epsilon(&z, 0.05).unwrap();
        assert!(n2 <= 2 * n1 + 1);
        assert!(n_of_epsilon(&z, 0.0).is_err());
    }

    #[test]
    fn density_on_level_examples() {
        let z = BoundaryTraces::new(0.0, 0.0, 0.0, 0.0).unwrap();
        // Period two: two antipodal points.
        let orbit = vec![TracePoint::new(0.0, 0.0, 2.0), TracePoint::new(0.0, 0.0, -2.0)];
        assert!(!epsilon_density_on_level(&z, &orbit, Axis::X, 0.0, 0.01).unwrap());
        assert!(epsilon_density_on_level(&z, &orbit, Axis::X, 0.0, 10.0).unwrap());
        assert!(epsilon_density_on_level(&z, &orbit, Axis::X, 2.5, 0.1).is_err());
    }

    #[test]
    fn density_scan_on_special_orbit() {
        let b = example5().map(|t| t.to_f64()).unwrap();
        // The compact component is small, so only a fine eps separates it from the two orbit points.
        let r = density_scan(&b, &TracePoint::new(-1.0, 0.0, 0.0), &DensityOptions::new(0.01, 1000)).unwrap();
        assert!(!r.truncated);
        assert_eq!(r.orbit_points, 2);
        assert!(r.covered_fraction < 0.2);
        let r = density_scan(&b, &TracePoint::new(-1.0, 0.0, 0.0), &DensityOptions::new(10.0, 1000)).unwrap();
        assert_eq!(r.covered_fraction, 1.0);
    }
}
