use cutproj::suspension::{circular_distance, step_gap, BaseState, ModelSetWalk, Suspension};
use cutproj::{closure_on_axis, enumerate_model_set, Budget, Scheme, Structured};
use proptest::prelude::*;

fn balanced_thirty() -> Scheme {
    Scheme::thirty_degrees(1.0).unwrap().balanced()
}

#[test]
fn gaps_follow_the_step_rule_for_both_schemes() {
    for scheme in [balanced_thirty(), Scheme::fibonacci(1.0).unwrap().balanced()] {
        let pts = enumerate_model_set(&scheme, -50.0, 50.0, Budget::default()).unwrap();
        for w in pts.windows(2) {
            let (dx, ds) = step_gap(w[0].x_star, &scheme).unwrap();
            assert!((w[1].x - w[0].x - dx).abs() <= 1e-12);
            assert!((w[1].x_star - w[0].x_star - ds).abs() <= 1e-12);
        }
    }
}

#[test]
fn base_orbit_becomes_dense() {
    let scheme = balanced_thirty();
    let period = scheme.balanced_epsilon();
    let h = 1e-3;
    let mut walk = ModelSetWalk::new(&scheme).unwrap();
    let mut seen: Vec<f64> = Vec::new();
    // three-gap behaviour: a few thousand returns suffice for h = 1e-3
    for _ in 0..20_000 {
        seen.push(walk.x_star());
        walk.advance();
    }
    seen.sort_by(f64::total_cmp);
    let mut worst = seen[0].max(period - seen[seen.len() - 1]);
    for w in seen.windows(2) {
        worst = worst.max(w[1] - w[0]);
    }
    assert!(worst / 2.0 <= h, "coverage radius {}", worst / 2.0);
}

#[test]
fn hit_parameters_fill_the_projected_stripe() {
    // ε·λ* = −1/2 for the diagonal slope: the stripe projected mod 1 is an
    // arc of length 1/2 ending at 0.
    let scheme = balanced_thirty();
    let slope = Structured::new(1, -1, 1).unwrap();
    let sus = Suspension::new(scheme, slope).unwrap();
    let stripes = closure_on_axis(&scheme, &slope, 0.0, 1.0).unwrap();
    let mut alphas: Vec<f64> = sus.lemma4_alphas(5000).into_iter().map(|(_, a)| a).collect();
    alphas.sort_by(f64::total_cmp);
    // every α lies on the arc, the arc has no 1e-3 hole
    for &a in &alphas {
        let on_arc = stripes.contains(a, 1e-9) || stripes.contains(a - 1.0, 1e-9) || a < 1e-9;
        assert!(on_arc, "alpha {a}");
    }
    for y in stripes.grid(1e-3) {
        let y = y.rem_euclid(1.0);
        let near = alphas.iter().map(|&a| circular_distance(a - y, 1)).fold(f64::INFINITY, f64::min);
        assert!(near <= 1e-3, "no alpha near {y}");
    }
}

fn balanced_case() -> impl Strategy<Value = (Scheme, Structured, f64)> {
    (0.1f64..1.4, -5i64..=5, -5i64..=5, 1i64..=5, 0.0f64..1.0).prop_filter_map("usable slope", |(theta, a, b, d, u)| {
        let scheme = Scheme::from_radians(theta, 1.0).ok()?.balanced();
        let slope = Structured::new(a, b, d).ok()?;
        (slope.lambda_star(&scheme).abs() > 1e-3).then_some((scheme, slope, u / d as f64))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn stepped_orbits_keep_their_invariant((scheme, slope, alpha) in balanced_case()) {
        let sus = Suspension::new(scheme, slope).unwrap();
        let mut state = BaseState::new(0.0, alpha);
        for _ in 0..5_000 {
            prop_assert!(sus.invariant_residual(state, alpha) < 1e-9);
            state = sus.poincare_step(state);
        }
    }

    #[test]
    fn stepped_and_integer_orbits_agree((scheme, slope, alpha) in balanced_case()) {
        let sus = Suspension::new(scheme, slope).unwrap();
        let mut state = BaseState::new(0.0, alpha);
        let inv_d = 1.0 / slope.d() as f64;
        for rec in sus.orbit(alpha).take(2_000) {
            prop_assert!((rec.xi - state.xi).abs() < 1e-9);
            let gap = (rec.eta - state.eta).abs();
            prop_assert!(gap.min(inv_d - gap) < 1e-9);
            state = sus.poincare_step(state);
        }
    }

    #[test]
    fn line_slope_is_well_defined(theta in 0.05f64..1.5, a in -50i64..50, b in -50i64..50, d in 1i64..50) {
        prop_assume!((a, b) != (0, 0));
        let scheme = Scheme::from_radians(theta, 1.0).unwrap();
        let (c, s) = (scheme.cos_theta(), scheme.sin_theta());
        let lambda = a as f64 * c - b as f64 * s;
        let lambda_star = a as f64 * s + b as f64 * c;
        let d = d as f64;
        let first = (lambda * c - a as f64) / d / s;
        let second = -(lambda * s + b as f64) / d / c;
        let scale = 1.0 + lambda_star.abs();
        prop_assert!((first + lambda_star / d).abs() < 1e-12 * scale / s.min(c));
        prop_assert!((second + lambda_star / d).abs() < 1e-12 * scale / s.min(c));
    }

    #[test]
    fn hit_parameter_round_trips((scheme, slope, _alpha) in balanced_case(), j in -200i64..200) {
        let sus = Suspension::new(scheme, slope).unwrap();
        let mut walk = ModelSetWalk::new(&scheme).unwrap();
        walk.seek(j);
        let alpha = sus.lemma4_alpha_for_hit(j);
        prop_assert!(circular_distance(sus.l_alpha_eval(alpha, walk.x_star()), slope.d()) < 1e-12);
    }
}
