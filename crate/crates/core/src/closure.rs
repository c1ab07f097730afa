//! Closed interval sets and the stripe closure on the y-axis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfmt::serialize_g17;
use crate::scheme::Scheme;
use crate::slope::{classify_slope, Classification, Slope, Structured};
use crate::BOUNDARY_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(serialize_with = "serialize_g17")]
    pub lo: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval [{lo}, {hi}] is reversed");
        Self { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn distance(&self, y: f64) -> f64 {
        if y < self.lo {
            self.lo - y
        } else if y > self.hi {
            y - self.hi
        } else {
            0.0
        }
    }
}

/// Sorted, pairwise-disjoint closed intervals. Touching intervals merge.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi + BOUNDARY_TOL => last.hi = last.hi.max(iv.hi),
                _ => merged.push(iv),
            }
        }
        Self { intervals: merged }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn total_length(&self) -> f64 {
        self.intervals.iter().map(Interval::width).sum()
    }

    /// Distance from `y` to the set (infinite for the empty set).
    pub fn distance(&self, y: f64) -> f64 {
        let idx = self.intervals.partition_point(|iv| iv.hi < y);
        let mut best = f64::INFINITY;
        if let Some(iv) = self.intervals.get(idx) {
            best = best.min(iv.distance(y));
        }
        if idx > 0 {
            best = best.min(self.intervals[idx - 1].distance(y));
        }
        best
    }

    pub fn contains(&self, y: f64, tol: f64) -> bool {
        self.distance(y) <= tol
    }

    /// Points `lo, lo + h, …` of each interval (plus its right end).
    pub fn grid(&self, h: f64) -> impl Iterator<Item = f64> + '_ {
        assert!(h > 0.0, "grid step must be positive");
        self.intervals.iter().flat_map(move |iv| {
            let steps = (iv.width() / h).floor() as u64;
            (0..=steps).map(move |i| iv.lo + i as f64 * h).chain(std::iter::once(iv.hi))
        })
    }
}

/// The closure of the axis trace `S` intersected with `[y_min, y_max]`:
/// the union over `l ∈ ℤ` of the closed intervals with endpoints `l/d`
/// and `(l + ελ*)/d`.
///
/// Only defined in the stripes regime; dense slopes are an error.
pub fn closure_on_axis(scheme: &Scheme, slope: &Structured, y_min: f64, y_max: f64) -> Result<IntervalSet> {
    if !(y_min.is_finite() && y_max.is_finite()) || y_min > y_max {
        return Err(Error::InvalidArgument(format!("invalid y range [{y_min}, {y_max}]")));
    }
    let params = match classify_slope(scheme, &Slope::Structured(*slope))? {
        Classification::Stripes(p) => p,
        _ => {
            return Err(Error::NotStriped { product: scheme.epsilon() * slope.lambda_star(scheme).abs() });
        }
    };
    let d = params.d as f64;
    let offset = params.offset();
    let l_lo = (y_min * d).floor() as i64 - 1;
    let l_hi = (y_max * d).ceil() as i64 + 1;
    let mut out = Vec::new();
    for l in l_lo..=l_hi {
        let p = l as f64 / d;
        let q = p + offset;
        let (lo, hi) = if p <= q { (p, q) } else { (q, p) };
        if hi < y_min - BOUNDARY_TOL || lo > y_max + BOUNDARY_TOL {
            continue;
        }
        let lo = lo.max(y_min);
        let hi = hi.min(y_max);
        out.push(Interval::new(lo.min(hi), hi.max(lo)));
    }
    Ok(IntervalSet::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Scheme, Structured) {
        (Scheme::thirty_degrees((1.0 + 3f64.sqrt()) / 2.0).unwrap(), Structured::new(1, -1, 1).unwrap())
    }

    fn assert_intervals(set: &IntervalSet, want: &[(f64, f64)]) {
        assert_eq!(set.len(), want.len(), "{set:?}");
        for (iv, (lo, hi)) in set.intervals().iter().zip(want) {
            assert!((iv.lo - lo).abs() < 1e-12 && (iv.hi - hi).abs() < 1e-12, "{iv:?} vs [{lo}, {hi}]");
        }
    }

    #[test]
    fn unit_spacing_half_width() {
        let (sc, st) = setup();
        let set = closure_on_axis(&sc, &st, 0.0, 2.0).unwrap();
        assert_intervals(&set, &[(0.0, 0.0), (0.5, 1.0), (1.5, 2.0)]);
    }

    #[test]
    fn gap_between_stripes_is_empty() {
        let (sc, st) = setup();
        assert!(closure_on_axis(&sc, &st, 0.1, 0.4).unwrap().is_empty());
    }

    #[test]
    fn denominator_two_halves_spacing_and_width() {
        let (sc, _) = setup();
        let st = Structured::new(1, -1, 2).unwrap();
        let set = closure_on_axis(&sc, &st, 0.0, 1.0).unwrap();
        assert_intervals(&set, &[(0.0, 0.0), (0.25, 0.5), (0.75, 1.0)]);
        for w in set.intervals().windows(2) {
            assert!((w[1].lo - w[0].lo - 0.5).abs() < 1e-12 || w[0].width() == 0.0);
        }
    }

    #[test]
    fn positive_lambda_star_orients_to_the_right() {
        let (sc, _) = setup();
        // λ* = sinθ + cosθ·0 = 0.5 for (a, b) = (1, 0); ε = 1 gives width 0.5.
        let sc = sc.with_epsilon(1.0).unwrap();
        let st = Structured::new(1, 0, 1).unwrap();
        let set = closure_on_axis(&sc, &st, -0.2, 1.2).unwrap();
        assert_intervals(&set, &[(0.0, 0.5), (1.0, 1.2)]);
    }

    #[test]
    fn dense_regime_is_misuse() {
        let (sc, st) = setup();
        let wide = sc.with_epsilon(3.0).unwrap();
        assert!(matches!(closure_on_axis(&wide, &st, 0.0, 1.0), Err(Error::NotStriped { .. })));
    }

    #[test]
    fn touching_intervals_merge() {
        let set = IntervalSet::new(vec![Interval::new(1.0, 2.0), Interval::new(0.0, 1.0), Interval::new(3.0, 4.0)]);
        assert_eq!(set.len(), 2);
        assert_eq!(set.intervals()[0], Interval::new(0.0, 2.0));
        assert_eq!(set.distance(2.5), 0.5);
        assert_eq!(set.distance(-1.0), 1.0);
        assert_eq!(set.distance(3.5), 0.0);
    }
}
