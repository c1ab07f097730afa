//! The closed-form stripe set against the brute-force intercept trace.

use cutproj::{
    classify_slope, closure_on_axis, kronecker_density_check, trace_axis_intercepts, Budget, Classification, Error,
    Scheme, Slope, Structured,
};
use proptest::prelude::*;

const HALF_PHI: f64 = 1.366_025_403_784_438_6;

fn thirty(eps: f64) -> Scheme {
    Scheme::thirty_degrees(eps).unwrap()
}

fn diagonal() -> Structured {
    Structured::new(1, -1, 1).unwrap()
}

#[test]
fn traced_intercepts_lie_in_stripes() {
    let scheme = thirty(HALF_PHI);
    let trace = trace_axis_intercepts(&scheme, &diagonal(), 50.0, -4.0, 4.0, Budget::default()).unwrap();
    let stripes = closure_on_axis(&scheme, &diagonal(), -4.0, 4.0).unwrap();
    assert!(trace.len() > 100);
    for y in trace.values() {
        assert!(stripes.distance(y) <= 1e-9, "intercept {y} outside the stripes");
    }
}

#[test]
fn origin_line_has_intercept_zero() {
    let scheme = thirty(HALF_PHI);
    let trace = trace_axis_intercepts(&scheme, &diagonal(), 1.0, -0.01, 0.01, Budget::default()).unwrap();
    let origin = trace.intercepts().iter().find(|i| i.source.m == 0 && i.source.n == 0).unwrap();
    assert_eq!(origin.value, 0.0);
    assert_eq!(origin.source.k, 0);
}

#[test]
fn intercepts_match_their_source_points() {
    let scheme = thirty(HALF_PHI);
    let slope = Structured::new(2, -1, 3).unwrap();
    let trace = trace_axis_intercepts(&scheme, &slope, 30.0, -2.0, 2.0, Budget::default()).unwrap();
    for i in trace.intercepts() {
        let p = i.source;
        let x = scheme.physical(p.m, p.n);
        let naive = p.k as f64 - slope.value(&scheme) * x;
        assert!((i.value - naive).abs() < 1e-12, "{} vs {naive}", i.value);
    }
}

#[test]
fn stripes_fill_up_as_the_extent_grows() {
    let scheme = thirty(HALF_PHI);
    let stripes = closure_on_axis(&scheme, &diagonal(), -1.0, 1.0).unwrap();
    let trace = trace_axis_intercepts(&scheme, &diagonal(), 1000.0, -1.01, 1.01, Budget::default()).unwrap();
    let worst = stripes.grid(1e-3).map(|y| trace.nearest_distance(y)).fold(0.0, f64::max);
    assert!(worst <= 2e-3, "worst grid distance {worst}");
}

#[test]
fn wide_window_traces_are_dense() {
    let scheme = thirty(2.8);
    assert_eq!(
        classify_slope(&scheme, &Slope::Structured(diagonal())).unwrap(),
        Classification::Dense { reason: cutproj::DenseReason::WideWindow }
    );
    let trace = trace_axis_intercepts(&scheme, &diagonal(), 200.0, -0.05, 1.05, Budget::default()).unwrap();
    let radius = trace.coverage_radius(0.0, 1.0);
    assert!(radius <= 0.02, "coverage radius {radius}");
    assert!(matches!(closure_on_axis(&scheme, &diagonal(), 0.0, 1.0), Err(Error::NotStriped { .. })));
}

#[test]
fn kronecker_probe_on_a_lattice_point_is_exact() {
    let scheme = thirty(HALF_PHI);
    let x = scheme.physical(1, 0);
    let probe = kronecker_density_check(&scheme, 2f64.sqrt(), (x, 3.0), 0.01, 1.0, Budget::default()).unwrap();
    assert!(probe.hit);
    assert_eq!(probe.min_distance, 0.0);
}

#[test]
fn kronecker_probe_refines_monotonically() {
    let scheme = thirty(HALF_PHI);
    let mut last = f64::INFINITY;
    for t_max in [10.0, 100.0, 1000.0] {
        let probe = kronecker_density_check(&scheme, 2f64.sqrt(), (0.3, 0.7), 0.05, t_max, Budget::default()).unwrap();
        assert!(probe.min_distance <= last);
        last = probe.min_distance;
    }
    assert!(last < 0.05);
}

fn stripe_case() -> impl Strategy<Value = (Scheme, Structured)> {
    (0.1f64..1.4, -4i64..=4, -4i64..=4, 1i64..=4, 0.05f64..1.0)
        .prop_filter("nonzero direction", |(_, a, b, _, _)| (*a, *b) != (0, 0))
        .prop_filter_map("striped regime", |(theta, a, b, d, frac)| {
            let scheme = Scheme::from_radians(theta, 1.0).ok()?;
            let slope = Structured::new(a, b, d).ok()?;
            let ls = slope.lambda_star(&scheme).abs();
            if ls < 1e-3 {
                return None;
            }
            // ε chosen as a fraction of the threshold 1/|λ*|
            let scheme = scheme.with_epsilon(frac / ls).ok()?;
            Some((scheme, slope))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn containment_for_random_striped_families((scheme, slope) in stripe_case()) {
        let trace = trace_axis_intercepts(&scheme, &slope, 20.0, -2.0, 2.0, Budget::default()).unwrap();
        let stripes = closure_on_axis(&scheme, &slope, -2.0, 2.0).unwrap();
        for y in trace.values() {
            prop_assert!(stripes.distance(y) <= 1e-9, "intercept {} off by {}", y, stripes.distance(y));
        }
    }

    #[test]
    fn components_are_equal_and_separated((scheme, slope) in stripe_case()) {
        let Classification::Stripes(params) = classify_slope(&scheme, &Slope::Structured(slope)).unwrap() else {
            panic!("expected stripes");
        };
        prop_assert!(params.width() > 0.0 && params.width() < params.spacing());
        let lo = -3.0;
        let hi = 3.0;
        let stripes = closure_on_axis(&scheme, &slope, lo, hi).unwrap();
        let inner: Vec<_> = stripes.intervals().iter().filter(|iv| iv.lo > lo && iv.hi < hi).collect();
        // d stripes per unit length
        prop_assert!(inner.len() as i64 >= 6 * slope.d() - 2);
        for iv in &inner {
            prop_assert!((iv.width() - params.width()).abs() < 1e-12);
        }
        for w in inner.windows(2) {
            prop_assert!((w[1].lo - w[0].lo - params.spacing()).abs() < 1e-12);
            prop_assert!(w[1].lo > w[0].hi);
        }
    }
}
