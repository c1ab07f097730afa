//! Acceptance criteria, runnable from the library, the test suite and the
//! `check` command. Every threshold is pinned here.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closure::closure_on_axis;
use crate::error::Result;
use crate::kronecker::kronecker_density_check;
use crate::lattice::{enumerate_model_set, Budget};
use crate::render::Figure;
use crate::scheme::Scheme;
use crate::slope::{classify_slope, Classification, Slope, Structured};
use crate::suspension::{reduce_mod_inv, step_gap, BaseState, Suspension};
use crate::trace::trace_axis_intercepts;

pub const GOLDEN_FIGURE_1: &str = include_str!("../golden/figure1.svg");
pub const GOLDEN_FIGURE_2: &str = include_str!("../golden/figure2.svg");

pub const SOUNDNESS_TOL: f64 = 1e-9;
pub const SOUNDNESS_EXTENT: f64 = 200.0;
pub const SOUNDNESS_MAX_SECS: f64 = 5.0;
pub const COMPLETENESS_EXTENT: f64 = 2000.0;
pub const COMPLETENESS_GRID: f64 = 1e-3;
pub const COMPLETENESS_RADIUS: f64 = 2e-3;
pub const COMPLETENESS_WINDOW: (f64, f64) = (-3.0, 3.0);
pub const COMPLETENESS_MAX_SECS: f64 = 30.0;
pub const DENSE_EPSILON: f64 = 2.75;
pub const STRIPED_EPSILON: f64 = 2.70;
pub const DENSE_EXTENT: f64 = 500.0;
pub const DENSE_RADIUS: f64 = 0.02;
pub const PERSISTENT_GAP: f64 = 0.005;
pub const FIGURE_COUNT_BAND: usize = 5;
pub const IET_STEPS: usize = 100_000;
pub const IET_ALPHAS: usize = 20;
pub const IET_TOL: f64 = 1e-9;
pub const IET_MAX_SECS: f64 = 1.0;
pub const LEMMA4_J_MAX: u64 = 10_000;
pub const LEMMA4_HAUSDORFF: f64 = 1e-3;
pub const KRONECKER_TARGETS: usize = 20;
pub const KRONECKER_DELTA: f64 = 0.05;
pub const KRONECKER_T_MAX: f64 = 1e4;
pub const STEP_LEMMA_RANGE: f64 = 50.0;
pub const STEP_LEMMA_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} ({:.3} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

fn timed(id: u8, title: &'static str, body: impl FnOnce() -> Result<(bool, String)>) -> CriterionReport {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionReport { id, title, passed, detail, elapsed: start.elapsed() }
}

fn figure_scheme() -> Scheme {
    Scheme::thirty_degrees((1.0 + 3f64.sqrt()) / 2.0).expect("π/6 scheme")
}

fn diagonal_slope() -> Structured {
    Structured::new(1, -1, 1).expect("valid slope")
}

pub fn stripe_closure_soundness() -> CriterionReport {
    timed(1, "stripe closure soundness", || {
        let start = Instant::now();
        let (sc, st) = (figure_scheme(), diagonal_slope());
        let (lo, hi) = COMPLETENESS_WINDOW;
        let closure = closure_on_axis(&sc, &st, lo, hi)?;
        let trace = trace_axis_intercepts(&sc, &st, SOUNDNESS_EXTENT, lo, hi, Budget::default())?;
        let worst = trace.values().map(|v| closure.distance(v)).fold(0.0, f64::max);
        let secs = start.elapsed().as_secs_f64();
        Ok((
            worst <= SOUNDNESS_TOL && !trace.is_empty() && secs < SOUNDNESS_MAX_SECS,
            format!("{} intercepts, max distance to closure {worst:.3e} (tol {SOUNDNESS_TOL:e})", trace.len()),
        ))
    })
}

pub fn stripe_closure_completeness() -> CriterionReport {
    timed(2, "stripe closure completeness", || {
        let start = Instant::now();
        let (sc, st) = (figure_scheme(), diagonal_slope());
        let (lo, hi) = COMPLETENESS_WINDOW;
        let closure = closure_on_axis(&sc, &st, lo, hi)?;
        let margin = 2.0 * COMPLETENESS_RADIUS;
        let trace = trace_axis_intercepts(&sc, &st, COMPLETENESS_EXTENT, lo - margin, hi + margin, Budget::default())?;
        let mut worst = 0.0f64;
        let mut count = 0usize;
        for y in closure.grid(COMPLETENESS_GRID) {
            worst = worst.max(trace.nearest_distance(y));
            count += 1;
        }
        let secs = start.elapsed().as_secs_f64();
        Ok((
            worst <= COMPLETENESS_RADIUS && secs < COMPLETENESS_MAX_SECS,
            format!("{count} grid points, worst nearest-intercept distance {worst:.3e} (tol {COMPLETENESS_RADIUS:e})"),
        ))
    })
}

pub fn dense_threshold() -> CriterionReport {
    timed(3, "dense threshold", || {
        let sc = figure_scheme();
        let st = diagonal_slope();
        let dense = sc.with_epsilon(DENSE_EPSILON)?;
        let striped = sc.with_epsilon(STRIPED_EPSILON)?;
        let dense_class = classify_slope(&dense, &Slope::Structured(st))?;
        let striped_class = classify_slope(&striped, &Slope::Structured(st))?;

        let trace = trace_axis_intercepts(&dense, &st, DENSE_EXTENT, -0.1, 1.1, Budget::default())?;
        let radius = trace.coverage_radius(0.0, 1.0);

        let mut min_gap = f64::INFINITY;
        for extent in [200.0, DENSE_EXTENT, 2000.0] {
            let t = trace_axis_intercepts(&striped, &st, extent, -0.1, 1.1, Budget::default())?;
            let (g0, g1) = t.largest_gap(0.0, 1.0);
            min_gap = min_gap.min(g1 - g0);
        }
        let predicted_gap = match striped_class {
            Classification::Stripes(p) => p.spacing() - p.width(),
            _ => 0.0,
        };
        let ok = matches!(dense_class, Classification::Dense { .. })
            && matches!(striped_class, Classification::Stripes(_))
            && radius <= DENSE_RADIUS
            && min_gap >= PERSISTENT_GAP
            && predicted_gap >= PERSISTENT_GAP;
        Ok((
            ok,
            format!(
                "eps={DENSE_EPSILON}: coverage radius {radius:.3e} (<= {DENSE_RADIUS}); eps={STRIPED_EPSILON}: smallest largest-gap {min_gap:.4} over extents, predicted {predicted_gap:.4} (>= {PERSISTENT_GAP})"
            ),
        ))
    })
}

pub fn figure_reproduction() -> CriterionReport {
    timed(4, "figure reproduction", || {
        let mut ok = true;
        let mut parts = Vec::new();
        for (fig, golden) in [(Figure::One, GOLDEN_FIGURE_1), (Figure::Two, GOLDEN_FIGURE_2)] {
            let (family, svg) = fig.config().render(Budget::default())?;
            let expected = fig.expected_lines();
            let in_band = family.len().abs_diff(expected) <= FIGURE_COUNT_BAND;
            let identical = svg == golden;
            ok &= in_band && identical;
            parts.push(format!(
                "figure {}: lines={} (expected {expected}±{FIGURE_COUNT_BAND}), golden {}",
                if fig == Figure::One { 1 } else { 2 },
                family.len(),
                if identical { "identical" } else { "DIFFERS" }
            ));
        }
        Ok((ok, parts.join("; ")))
    })
}

pub fn iet_invariant() -> CriterionReport {
    timed(5, "IET invariant", || {
        let start = Instant::now();
        let sus = Suspension::new(figure_scheme(), diagonal_slope())?;
        let mut rng = ChaCha8Rng::seed_from_u64(0x1e7);
        let mut worst_float = 0.0f64;
        let mut worst_exact = 0.0f64;
        for _ in 0..IET_ALPHAS {
            let alpha: f64 = rng.gen_range(0.0..1.0);
            let mut state = BaseState::new(0.0, alpha);
            for _ in 0..IET_STEPS {
                state = sus.poincare_step(state);
                worst_float = worst_float.max(sus.invariant_residual(state, alpha));
            }
            for rec in sus.orbit(alpha).take(IET_STEPS + 1) {
                worst_exact = worst_exact.max(rec.invariant_residual);
            }
        }
        let secs = start.elapsed().as_secs_f64();
        Ok((
            worst_float < IET_TOL && worst_exact < IET_TOL && secs < IET_MAX_SECS,
            format!(
                "{IET_ALPHAS} alphas x {IET_STEPS} steps: max residual {worst_float:.3e} (stepped), {worst_exact:.3e} (from integers), tol {IET_TOL:e}"
            ),
        ))
    })
}

/// Distance from `v` to the arc `{lo + u : 0 ≤ u ≤ len}` on the circle of
/// circumference `period`.
fn arc_distance(v: f64, lo: f64, len: f64, period: f64) -> f64 {
    let r = (v - lo).rem_euclid(period);
    if r <= len {
        0.0
    } else {
        (r - len).min(period - r)
    }
}

fn circle_distance(a: f64, b: f64, period: f64) -> f64 {
    let r = (a - b).rem_euclid(period);
    r.min(period - r)
}

pub fn lemma4_cross_check() -> CriterionReport {
    timed(6, "hit-parameter / closure cross-check", || {
        let sc = figure_scheme();
        let st = diagonal_slope();
        let sus = Suspension::new(sc, st)?;
        let d = st.d();
        let period = 1.0 / d as f64;
        let mut alphas: Vec<f64> = sus.lemma4_alphas(LEMMA4_J_MAX).into_iter().map(|(_, a)| a).collect();
        alphas.sort_by(f64::total_cmp);

        // Projection of the closure mod 1/d: the arc from min(0, ελ*/d) of
        // length min(ε|λ*|/d, 1/d).
        let offset = sc.epsilon() * st.lambda_star(&sc) / d as f64;
        let arc_lo = reduce_mod_inv(offset.min(0.0), d);
        let arc_len = offset.abs().min(period);

        let into_arc = alphas.iter().map(|a| arc_distance(*a, arc_lo, arc_len, period)).fold(0.0, f64::max);

        let nearest = |y: f64| {
            let y = y.rem_euclid(period);
            let idx = alphas.partition_point(|a| *a < y);
            let above = alphas.get(idx).copied().unwrap_or(alphas[0] + period);
            let below = if idx > 0 { alphas[idx - 1] } else { alphas[alphas.len() - 1] - period };
            circle_distance(above, y, period).min(circle_distance(below, y, period))
        };
        let samples = 100_000u32;
        let from_arc = (0..=samples).map(|i| nearest(arc_lo + arc_len * i as f64 / samples as f64)).fold(0.0, f64::max);
        let hausdorff = into_arc.max(from_arc);
        Ok((
            hausdorff <= LEMMA4_HAUSDORFF,
            format!(
                "{} alphas, Hausdorff distance to projected closure {hausdorff:.3e} (tol {LEMMA4_HAUSDORFF:e}, arc sampled at {:.1e})",
                alphas.len(),
                arc_len / samples as f64
            ),
        ))
    })
}

pub fn kronecker_probe() -> CriterionReport {
    timed(7, "Kronecker probe", || {
        let sc = figure_scheme();
        let s = 2f64.sqrt();
        let mut rng = ChaCha8Rng::seed_from_u64(0x4b52);
        let mut all_hit = true;
        let mut monotone = true;
        let mut worst = 0.0f64;
        for _ in 0..KRONECKER_TARGETS {
            let target = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            let mut prev = f64::INFINITY;
            for t_max in [1.0, 10.0, 100.0, 1000.0, KRONECKER_T_MAX] {
                let probe = kronecker_density_check(&sc, s, target, KRONECKER_DELTA, t_max, Budget::default())?;
                monotone &= probe.min_distance <= prev;
                prev = probe.min_distance;
                if t_max == KRONECKER_T_MAX {
                    all_hit &= probe.hit;
                    worst = worst.max(probe.min_distance);
                }
            }
        }
        Ok((
            all_hit && monotone,
            format!(
                "{KRONECKER_TARGETS} targets, all hit: {all_hit}, monotone: {monotone}, worst min distance at t_max={KRONECKER_T_MAX:e}: {worst:.3e} (delta {KRONECKER_DELTA})"
            ),
        ))
    })
}

pub fn step_lemma_equivalence() -> CriterionReport {
    timed(8, "step-lemma equivalence", || {
        let mut worst = 0.0f64;
        let mut pairs = 0usize;
        for scheme in [Scheme::fibonacci(1.0)?.balanced(), figure_scheme().balanced()] {
            let pts = enumerate_model_set(&scheme, -STEP_LEMMA_RANGE, STEP_LEMMA_RANGE, Budget::default())?;
            for w in pts.windows(2) {
                let (dx, ds) = step_gap(w[0].x_star, &scheme)?;
                worst = worst.max((w[1].x - w[0].x - dx).abs()).max((w[1].x_star - w[0].x_star - ds).abs());
                pairs += 1;
            }
        }
        Ok((
            worst <= STEP_LEMMA_TOL && pairs > 0,
            format!("{pairs} consecutive pairs, max deviation {worst:.3e} (tol {STEP_LEMMA_TOL:e})"),
        ))
    })
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<CriterionReport> {
    vec![
        stripe_closure_soundness(),
        stripe_closure_completeness(),
        dense_threshold(),
        figure_reproduction(),
        iet_invariant(),
        lemma4_cross_check(),
        kronecker_probe(),
        step_lemma_equivalence(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_distance_wraps() {
        assert_eq!(arc_distance(0.7, 0.5, 0.5, 1.0), 0.0);
        assert_eq!(arc_distance(0.0, 0.5, 0.5, 1.0), 0.0);
        assert!((arc_distance(0.25, 0.5, 0.5, 1.0) - 0.25).abs() < 1e-15);
        assert!((arc_distance(0.1, 0.5, 0.3, 1.0) - 0.3).abs() < 1e-15);
        assert!((circle_distance(0.95, 0.05, 1.0) - 0.1).abs() < 1e-15);
    }
}
