//! Finite density certificate for generic slopes.
//!
//! For `s ∉ ℚ cosθ + ℚ sinθ` the family `Λ + (1, s)ℝ` is dense in the
//! plane, so every line of slope `s` passes arbitrarily close to `Λ`. The
//! probe measures how close a given line gets within a bounded parameter
//! range.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_model_set, Budget, LatticePoint};
use crate::numfmt::serialize_g17;
use crate::scheme::Scheme;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KroneckerProbe {
    pub hit: bool,
    #[serde(serialize_with = "serialize_g17")]
    pub min_distance: f64,
    /// The point of `Λ` attaining `min_distance`.
    pub nearest: Option<LatticePoint>,
}

/// Scans the line `t ↦ target + t·(1, s)`, `|t| ≤ t_max`, against `Λ`.
///
/// Every point `(x, k)` of `Λ` with `|x − target.x| ≤ t_max` is measured by
/// its perpendicular distance to the line. The nearest `k` for a given `x`
/// is the integer closest to the line's height there. Enlarging `t_max`
/// only adds candidates, so `min_distance` never increases.
pub fn kronecker_density_check(
    scheme: &Scheme,
    s: f64,
    target: (f64, f64),
    delta: f64,
    t_max: f64,
    budget: Budget,
) -> Result<KroneckerProbe> {
    if !(delta.is_finite() && delta > 0.0) {
        return Err(Error::InvalidArgument(format!("delta must be positive, got {delta}")));
    }
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::InvalidArgument(format!("t_max must be positive, got {t_max}")));
    }
    if !(s.is_finite() && target.0.is_finite() && target.1.is_finite()) {
        return Err(Error::InvalidArgument("slope and target must be finite".into()));
    }
    let (x0, y0) = target;
    let norm = s.hypot(1.0);
    let points = enumerate_model_set(scheme, x0 - t_max, x0 + t_max, budget)?;

    let mut best = KroneckerProbe { hit: false, min_distance: f64::INFINITY, nearest: None };
    for p in &points {
        let height = y0 + s * (p.x - x0);
        let k = height.round();
        let dist = (k - height).abs() / norm;
        if dist < best.min_distance {
            best.min_distance = dist;
            best.nearest = Some(p.lattice.with_height(k as i64));
        }
    }
    best.hit = best.min_distance < delta;
    Ok(best)
}
