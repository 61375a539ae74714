mod common;

use common::{kappa_oracle, traces};
use fourhole::scalar::{q, Rational};
use fourhole::surface::{classify_along, kappa, level_set, lift_to_surface, pair_quadratic};
use fourhole::{Axis, BoundaryTraces, TracePoint};
use proptest::prelude::*;

fn float_traces() -> impl Strategy<Value = [f64; 4]> {
    [-1.95f64..1.95, -1.95f64..1.95, -1.95f64..1.95, -1.95f64..1.95]
}

fn axis() -> impl Strategy<Value = Axis> {
    prop::sample::select(Axis::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn slice_equation_agrees_with_kappa(t in float_traces(), x in -1.95f64..1.95, y in -1.95f64..1.95, delta in 1e-3f64..1.0) {
        let b = BoundaryTraces::from_array(t).unwrap();
        let lifted = lift_to_surface(&b, x, y).unwrap();
        prop_assume!(!lifted.is_empty());
        // The larger root: moving z up from it makes κ grow by δ(δ + √disc) ≥ δ².
        let on = lifted.last().unwrap().clone();
        let off = TracePoint::new(on.x, on.y, on.z + delta);
        for p in [&on, &off] {
            let k = kappa(&b, p);
            let near_surface = k.abs() <= 1e-9;
            prop_assert_eq!(near_surface, std::ptr::eq(p, &on));
            for a in Axis::ALL {
                let level = *p.get(a);
                if level.abs() >= 2.0 {
                    continue;
                }
                let r = level_set(&b, a, level).unwrap().residual(p);
                prop_assert_eq!(r.abs() <= 1e-8, near_surface, "axis {} κ {} residual {}", a, k, r);
            }
        }
    }

    #[test]
    fn level_sets_are_ellipses_inside_s(t in float_traces(), a in axis(), frac in 0.01f64..0.99) {
        let b = BoundaryTraces::from_array(t).unwrap();
        let c = classify_along(&b, a).unwrap();
        prop_assume!(!c.is_degenerate());
        let inside = c.lo + frac * (c.hi - c.lo);
        prop_assert!(level_set(&b, a, inside).unwrap().rhs > 0.0);
    }

    #[test]
    fn level_sets_are_empty_inside_exactly_one_pair_interval(t in float_traces(), a in axis(), x in -1.99f64..1.99) {
        let b = BoundaryTraces::from_array(t).unwrap();
        let c = classify_along(&b, a).unwrap();
        let (in1, in2) = (c.first.contains_interior(&x), c.second.contains_interior(&x));
        prop_assume!(in1 != in2);
        // Stay clear of the endpoints where rhs crosses zero.
        let ((u1, v1), (u2, v2)) = b.pairs(a);
        prop_assume!(pair_quadratic(u1, v1, &x).abs() > 1e-6 && pair_quadratic(u2, v2, &x).abs() > 1e-6);
        prop_assert!(level_set(&b, a, x).unwrap().rhs < 0.0);
    }

    #[test]
    fn invariants_match_their_polynomials(t in traces()) {
        let b = BoundaryTraces::from_array(t.clone()).unwrap();
        let [a, bb, c, d] = &t;
        prop_assert_eq!(b.sigma_x(), &(a * bb + c * d));
        prop_assert_eq!(b.sigma_y(), &(a * d + bb * c));
        prop_assert_eq!(b.sigma_z(), &(a * c + bb * d));
        prop_assert_eq!(b.s_const(), &(a * a + bb * bb + c * c + d * d + a * bb * c * d - q(4, 1)));
    }

    #[test]
    fn exact_slice_residual_is_kappa(t in traces(), p in common::point(3), a in axis()) {
        let b = BoundaryTraces::from_array(t.clone()).unwrap();
        let level = p.get(a).clone();
        prop_assume!(level > q(-2, 1) && level < q(2, 1));
        let geom = level_set(&b, a, level).unwrap();
        let tr: [&Rational; 4] = [&t[0], &t[1], &t[2], &t[3]];
        prop_assert_eq!(geom.residual(&p), kappa_oracle(tr, &p));
    }
}
