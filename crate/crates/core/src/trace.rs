//! Brute-force trace of the line family on the y-axis.
//!
//! Every line of slope `λ/d` through a point `(x, k)` of `Λ` meets the
//! y-axis at `k − λx/d`. Enumerating those intercepts over a finite piece
//! of `Λ` gives an oracle for the closure formula.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_model_set, Budget, LatticePoint};
use crate::numfmt::serialize_g17;
use crate::scheme::Scheme;
use crate::slope::Structured;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Intercept {
    #[serde(serialize_with = "serialize_g17")]
    pub value: f64,
    pub source: LatticePoint,
}

/// Intercepts sorted by value (ties broken by source point).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AxisTrace {
    intercepts: Vec<Intercept>,
}

impl AxisTrace {
    pub fn from_intercepts(mut intercepts: Vec<Intercept>) -> Self {
        intercepts.sort_by(|a, b| a.value.total_cmp(&b.value).then(a.source.cmp(&b.source)));
        Self { intercepts }
    }

    pub fn intercepts(&self) -> &[Intercept] {
        &self.intercepts
    }

    pub fn len(&self) -> usize {
        self.intercepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intercepts.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.intercepts.iter().map(|i| i.value)
    }

    /// Distance from `y` to the nearest traced intercept.
    pub fn nearest_distance(&self, y: f64) -> f64 {
        let idx = self.intercepts.partition_point(|i| i.value < y);
        let above = self.intercepts.get(idx).map(|i| i.value - y);
        let below = idx.checked_sub(1).map(|j| y - self.intercepts[j].value);
        match (above, below) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => f64::INFINITY,
        }
    }

    /// `sup` over `y ∈ [lo, hi]` of the distance to the nearest intercept.
    /// The trace is `h`-dense in `[lo, hi]` exactly when this is `≤ h`.
    pub fn coverage_radius(&self, lo: f64, hi: f64) -> f64 {
        let mut worst = self.nearest_distance(lo).max(self.nearest_distance(hi));
        for w in self.intercepts.windows(2) {
            let mid = 0.5 * (w[0].value + w[1].value);
            if mid > lo && mid < hi {
                worst = worst.max(self.nearest_distance(mid));
            }
        }
        worst
    }

    /// The widest sub-interval of `[lo, hi]` containing no intercept in its
    /// interior.
    pub fn largest_gap(&self, lo: f64, hi: f64) -> (f64, f64) {
        let mut prev = lo;
        let mut best = (lo, lo);
        let inside = self.values().filter(|v| *v > lo && *v < hi);
        for v in inside.chain(std::iter::once(hi)) {
            if v - prev > best.1 - best.0 {
                best = (prev, v);
            }
            prev = v;
        }
        best
    }
}

/// All intercepts `k − (λ/d)x` in `[y_min, y_max]` from points of `Λ` with
/// `|x| ≤ x_extent`.
pub fn trace_axis_intercepts(
    scheme: &Scheme,
    slope: &Structured,
    x_extent: f64,
    y_min: f64,
    y_max: f64,
    budget: Budget,
) -> Result<AxisTrace> {
    if !(x_extent.is_finite() && x_extent > 0.0) {
        return Err(Error::InvalidArgument(format!("x_extent must be positive, got {x_extent}")));
    }
    if !(y_min.is_finite() && y_max.is_finite()) || y_min > y_max {
        return Err(Error::InvalidArgument(format!("invalid y range [{y_min}, {y_max}]")));
    }
    let points = enumerate_model_set(scheme, -x_extent, x_extent, budget)?;
    let mut intercepts = Vec::new();
    for p in &points {
        let (m, n) = (p.m(), p.n());
        let base = slope.intercept(scheme, m, n, 0);
        let k_lo = (y_min - base).ceil() as i64 - 1;
        let k_hi = (y_max - base).floor() as i64 + 1;
        for k in k_lo..=k_hi {
            let value = slope.intercept(scheme, m, n, k);
            if value >= y_min && value <= y_max {
                intercepts.push(Intercept { value, source: LatticePoint::new(m, n, k) });
            }
        }
    }
    Ok(AxisTrace::from_intercepts(intercepts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn thirty(eps: f64) -> Scheme {
        Scheme::thirty_degrees(eps).unwrap()
    }

    #[test]
    fn origin_line_meets_axis_at_zero() {
        let sc = thirty(1.0);
        for (a, b, d) in [(1, -1, 1), (2, 1, 3), (0, 1, 1)] {
            let st = Structured::new(a, b, d).unwrap();
            let t = trace_axis_intercepts(&sc, &st, 1.0, -0.01, 0.01, Budget::default()).unwrap();
            let origin = t.intercepts().iter().find(|i| i.source == LatticePoint::ORIGIN).unwrap();
            assert_eq!(origin.value, 0.0);
        }
    }

    #[test]
    fn values_match_direct_formula() {
        let sc = thirty((1.0 + 3f64.sqrt()) / 2.0);
        let st = Structured::new(1, -1, 1).unwrap();
        let t = trace_axis_intercepts(&sc, &st, 50.0, -3.0, 3.0, Budget::default()).unwrap();
        assert!(!t.is_empty());
        for i in t.intercepts() {
            let x = i.source.physical(&sc);
            let direct = i.source.k as f64 - st.value(&sc) * x;
            assert!((i.value - direct).abs() < 1e-12);
            assert!((-3.0..=3.0).contains(&i.value));
        }
        assert!(t.values().collect::<Vec<_>>().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn gap_and_coverage_helpers() {
        let t = AxisTrace::from_intercepts(
            [0.1, 0.2, 0.6, 0.9]
                .iter()
                .enumerate()
                .map(|(i, v)| Intercept { value: *v, source: LatticePoint::new(i as i64, 0, 0) })
                .collect(),
        );
        let (lo, hi) = t.largest_gap(0.0, 1.0);
        assert!((lo - 0.2).abs() < 1e-15 && (hi - 0.6).abs() < 1e-15);
        assert!((t.coverage_radius(0.0, 1.0) - 0.2).abs() < 1e-15);
        assert!((t.nearest_distance(1.0) - 0.1).abs() < 1e-15);
        assert_eq!(AxisTrace::default().nearest_distance(0.0), f64::INFINITY);
    }

    #[test]
    fn rejects_bad_extent() {
        let sc = thirty(1.0);
        let st = Structured::new(1, -1, 1).unwrap();
        assert!(trace_axis_intercepts(&sc, &st, 0.0, 0.0, 1.0, Budget::default()).is_err());
        assert!(trace_axis_intercepts(&sc, &st, 1.0, 1.0, 0.0, Budget::default()).is_err());
    }
}
