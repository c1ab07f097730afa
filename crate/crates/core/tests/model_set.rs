use cutproj::{enumerate_model_set, star, Budget, Error, LatticePoint, Scheme};
use proptest::prelude::*;

const HALF_PHI: f64 = 1.366_025_403_784_438_6;

/// Every `(m, n)` in a generous square, filtered by the window and the
/// x-range. Deliberately shares nothing with the row sweep.
fn exhaustive(scheme: &Scheme, x_min: f64, x_max: f64, reach: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in -reach..=reach {
        for n in -reach..=reach {
            let x = m as f64 * scheme.cos_theta() - n as f64 * scheme.sin_theta();
            let xs = m as f64 * scheme.sin_theta() + n as f64 * scheme.cos_theta();
            if xs >= -1e-12 && xs < scheme.epsilon() - 1e-12 && x >= x_min && x <= x_max {
                out.push((m, n));
            }
        }
    }
    out.sort_by(|p, q| {
        let xp = p.0 as f64 * scheme.cos_theta() - p.1 as f64 * scheme.sin_theta();
        let xq = q.0 as f64 * scheme.cos_theta() - q.1 as f64 * scheme.sin_theta();
        xp.total_cmp(&xq)
    });
    out
}

#[test]
fn thirty_degree_points_in_zero_two() {
    let scheme = Scheme::thirty_degrees(HALF_PHI).unwrap();
    let pts = enumerate_model_set(&scheme, 0.0, 2.0, Budget::default()).unwrap();
    let lattice: Vec<_> = pts.iter().map(|p| (p.m(), p.n())).collect();
    assert_eq!(lattice, vec![(0, 0), (1, 0), (2, 0)]);
    let xs: Vec<f64> = pts.iter().map(|p| p.x).collect();
    for (got, want) in xs.iter().zip([0.0, 0.866_025_403_784_438_6, 1.732_050_807_568_877_2]) {
        assert!((got - want).abs() < 1e-12);
    }
}

#[test]
fn origin_alone_near_zero() {
    let scheme = Scheme::thirty_degrees(HALF_PHI).unwrap();
    let pts = enumerate_model_set(&scheme, -0.1, 0.1, Budget::default()).unwrap();
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].lattice, LatticePoint::ORIGIN);
}

#[test]
fn fibonacci_gaps_take_two_values() {
    let scheme = Scheme::fibonacci(1.0).unwrap().balanced();
    let pts = enumerate_model_set(&scheme, 0.0, 3.0, Budget::default()).unwrap();
    assert!(pts.len() >= 3);
    for w in pts.windows(2) {
        let gap = w[1].x - w[0].x;
        let near = |v: f64| (gap - v).abs() < 1e-12;
        assert!(near(scheme.cos_theta()) || near(scheme.sin_theta()), "gap {gap}");
    }
}

#[test]
fn star_on_unit_vectors() {
    let scheme = Scheme::thirty_degrees(1.0).unwrap();
    assert_eq!(star(0, 0, &scheme), 0.0);
    assert_eq!(star(1, 0, &scheme), 0.5);
    assert_eq!(star(0, 1, &scheme), scheme.cos_theta());
}

#[test]
fn oversized_requests_hit_the_budget() {
    let scheme = Scheme::thirty_degrees(HALF_PHI).unwrap();
    let err = enumerate_model_set(&scheme, -1e6, 1e6, Budget(1000)).unwrap_err();
    assert!(err.is_budget(), "{err}");
    let err = enumerate_model_set(&scheme, 1.0, 1.0, Budget::default()).unwrap_err();
    assert!(matches!(err, Error::InvalidArgument(_)));
}

#[test]
fn walk_far_out_and_back_without_drift() {
    use cutproj::suspension::ModelSetWalk;
    use cutproj::{closure_on_axis, Structured};

    let scheme = Scheme::thirty_degrees(HALF_PHI).unwrap();
    let slope = Structured::new(1, -1, 1).unwrap();
    let mut walk = ModelSetWalk::new(&scheme).unwrap();
    let mut summed = 0.0;
    for _ in 0..1_000_000 {
        let before = walk.x();
        walk.advance();
        summed += walk.x() - before;
    }
    let far = walk.lattice();
    // the far point is recovered independently by enumeration
    let x = walk.x();
    let around = enumerate_model_set(&scheme, x - 1.0, x + 1.0, Budget::default()).unwrap();
    assert!(around.iter().any(|p| p.lattice == far));
    assert!((summed - x).abs() < 1e-6, "summed gaps stay close, exact x is authoritative");
    assert!(scheme.in_window(walk.x_star()));

    let k = (slope.value(&scheme) * x).round() as i64;
    let y = slope.intercept(&scheme, far.m, far.n, k);
    let stripes = closure_on_axis(&scheme, &slope, y - 2.0, y + 2.0).unwrap();
    assert!(stripes.contains(y, 1e-12), "intercept {y} after 1e6 steps");

    walk.seek(0);
    assert_eq!(walk.lattice(), LatticePoint::ORIGIN);
    assert_eq!(walk.x(), 0.0);
    assert_eq!(walk.x_star(), 0.0);
}

fn any_scheme() -> impl Strategy<Value = Scheme> {
    (0.05f64..1.4, 0.2f64..3.0).prop_map(|(theta, eps)| Scheme::from_radians(theta, eps).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_exhaustive_search(
        scheme in any_scheme(),
        x_min in -6.0f64..6.0,
        width in 0.01f64..6.0,
    ) {
        let x_max = x_min + width;
        let got: Vec<(i64, i64)> = enumerate_model_set(&scheme, x_min, x_max, Budget::default())
            .unwrap()
            .iter()
            .map(|p| (p.m(), p.n()))
            .collect();
        // |m|, |n| ≤ |x| + ε bounds every candidate
        let reach = (x_min.abs().max(x_max.abs()) + scheme.epsilon()).ceil() as i64 + 2;
        prop_assert_eq!(got, exhaustive(&scheme, x_min, x_max, reach));
    }

    #[test]
    fn points_are_members_and_strictly_sorted(scheme in any_scheme(), x_min in -40.0f64..40.0) {
        let pts = enumerate_model_set(&scheme, x_min, x_min + 10.0, Budget::default()).unwrap();
        for p in &pts {
            let xs = star(p.m(), p.n(), &scheme);
            prop_assert_eq!(xs, p.x_star);
            prop_assert!(xs >= -1e-12 && xs < scheme.epsilon());
            prop_assert_eq!(p.lattice.k, 0);
        }
        for w in pts.windows(2) {
            prop_assert!(w[0].x < w[1].x);
        }
    }
}
