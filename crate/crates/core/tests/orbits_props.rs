mod common;

use std::collections::HashSet;

use common::{point, rational, traces};
use fourhole::orbits::{
    density_scan, enumerate_orbit, exceptional_family, filtration, is_closed, level_set_grid, rational_angle_of,
    twist_period, DensityOptions, LevelValue, OrbitStatus,
};
use fourhole::rep::is_in_f;
use fourhole::scalar::{q, Rational};
use fourhole::surface::{level_set, LevelShape};
use fourhole::twists::apply_generator;
use fourhole::{Axis, BoundaryTraces, TracePoint, TwistGenerator};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn filtration_levels_have_their_period(
        t in [-1.9f64..1.9, -1.9f64..1.9, -1.9f64..1.9, -1.9f64..1.9],
        n in 2i64..=9,
        pick in any::<prop::sample::Index>(),
        phase in any::<prop::sample::Index>(),
    ) {
        let b = BoundaryTraces::from_array(t).unwrap();
        let level = filtration(n).unwrap();
        let angles: Vec<_> = level.elements.iter().copied().collect();
        let angle = *pick.get(&angles);
        let y = angle.trace_level();
        let geom = level_set(&b, Axis::Y, y).unwrap();
        prop_assume!(geom.shape() == LevelShape::Ellipse && geom.rhs > 1e-6);
        let grid = level_set_grid(&b, Axis::Y, y, 0.2).unwrap();
        let p = phase.get(&grid).clone();
        let period = twist_period(&b, &p, Axis::Y).unwrap();
        prop_assert_eq!(period, Some(angle.q() as u64));
        prop_assert!(angle.q() <= n);
        let mut cur = p.clone();
        for _ in 0..angle.q() {
            cur = apply_generator(&b, &cur, TwistGenerator::forward(Axis::Y));
        }
        let drift = (cur.x - p.x).abs().max((cur.y - p.y).abs()).max((cur.z - p.z).abs());
        prop_assert!(drift <= 1e-8, "drift {}", drift);
    }

    #[test]
    fn rational_levels_have_exact_period(t in traces(), x in rational(3, 12, true), z in rational(3, 12, true), k in 0usize..3) {
        let b = BoundaryTraces::from_array(t).unwrap();
        let y = [q(0, 1), q(1, 1), q(-1, 1)][k].clone();
        let order = [2, 3, 3][k];
        let p = TracePoint::new(x, y, z);
        let mut cur = p.clone();
        for _ in 0..order {
            cur = apply_generator(&b, &cur, TwistGenerator::forward(Axis::Y));
        }
        prop_assert_eq!(cur, p);
    }

    #[test]
    fn only_niven_levels_are_recognised(r in rational(2, 200, false)) {
        let niven = r.is_zero() || r == q(1, 1) || r == q(-1, 1);
        prop_assert_eq!(rational_angle_of(&LevelValue::Exact(r), 64).is_some(), niven);
    }

    #[test]
    fn finite_orbits_are_closed(t in traces(), p in point(2)) {
        let b = BoundaryTraces::from_array(t).unwrap();
        let orbit = enumerate_orbit(&b, &p, 64).unwrap();
        if let OrbitStatus::Finite(n) = orbit.status {
            prop_assert_eq!(n, orbit.points.len());
            prop_assert!(is_closed(&b, &orbit.points, 0.0));
        }
    }

    #[test]
    fn exceptional_orbit_is_permuted(a in rational(2, 24, false), c in rational(2, 24, false)) {
        prop_assume!(is_in_f(&a, &c).unwrap());
        let fam = exceptional_family(&a, &c).unwrap();
        let set: HashSet<TracePoint<Rational>> = fam.special_orbit.iter().cloned().collect();
        for p in &fam.special_orbit {
            for g in TwistGenerator::ALL {
                prop_assert!(set.contains(&apply_generator(&fam.traces, p, g)));
            }
        }
    }
}

#[test]
fn coverage_grows_with_budget() {
    let b = BoundaryTraces::new(0.5, 0.5, 0.5, 1.0 / 3.0).unwrap();
    let p0 = fourhole::surface::surface_sample(&b, 3, 3).unwrap()[4].clone();
    let mut last = 0.0;
    for budget in [100, 1_000, 10_000, 100_000] {
        let r = density_scan(&b, &p0, &DensityOptions::new(0.1, budget)).unwrap();
        assert!(r.truncated);
        assert!(r.covered_fraction >= last, "{} < {last}", r.covered_fraction);
        last = r.covered_fraction;
    }
    assert_eq!(last, 1.0);
}
