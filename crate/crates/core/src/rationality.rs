//! Advisory check that `tanθ` is not (numerically) rational.

use serde::{Deserialize, Serialize};

use crate::numfmt::serialize_g17;
use crate::scheme::Scheme;

/// A convergent `p/q` of `tanθ` that is suspiciously close.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RationalityWarning {
    pub p: u64,
    pub q: u64,
    #[serde(serialize_with = "serialize_g17")]
    pub error: f64,
}

impl std::fmt::Display for RationalityWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "tan(theta) is within {:e} of {}/{}; results assume an irrational tangent",
            self.error, self.p, self.q
        )
    }
}

/// Walks the continued-fraction convergents of `tanθ` with denominator at
/// most `max_denominator` and reports the first one within `1e-9/q²`.
pub fn rationality_warning(scheme: &Scheme, max_denominator: u64) -> Option<RationalityWarning> {
    let target = scheme.tan_theta();
    let max_denominator = max_denominator.max(1);
    // convergent recurrences: p_k = a_k p_{k-1} + p_{k-2}, same for q
    let (mut p_prev, mut p) = (0u64, 1u64);
    let (mut q_prev, mut q) = (1u64, 0u64);
    let mut x = target;
    for _ in 0..64 {
        let a = x.floor();
        if !(0.0..=u64::MAX as f64).contains(&a) {
            break;
        }
        let a = a as u64;
        let (Some(p_next), Some(q_next)) = (
            a.checked_mul(p).and_then(|v| v.checked_add(p_prev)),
            a.checked_mul(q).and_then(|v| v.checked_add(q_prev)),
        ) else {
            break;
        };
        if q_next > max_denominator {
            break;
        }
        (p_prev, p) = (p, p_next);
        (q_prev, q) = (q, q_next);
        let error = (target - p as f64 / q as f64).abs();
        if error <= 1e-9 / (q as f64 * q as f64) {
            return Some(RationalityWarning { p, q, error });
        }
        let frac = x - a as f64;
        if frac <= 0.0 {
            break;
        }
        x = 1.0 / frac;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_is_flagged() {
        let sc = Scheme::from_tan(0.5, 1.0).unwrap();
        let w = rationality_warning(&sc, 10).unwrap();
        assert_eq!((w.p, w.q), (1, 2));
    }

    #[test]
    fn golden_ratio_is_clean() {
        assert_eq!(rationality_warning(&Scheme::fibonacci(1.0).unwrap(), 10_000), None);
    }

    #[test]
    fn thirty_degrees_is_clean() {
        let sc = Scheme::from_tan(1.0 / 3f64.sqrt(), 1.0).unwrap();
        assert_eq!(rationality_warning(&sc, 10_000), None);
        assert_eq!(rationality_warning(&Scheme::thirty_degrees(1.0).unwrap(), 10_000), None);
    }

    #[test]
    fn large_rationals_respect_the_denominator_cap() {
        let sc = Scheme::from_tan(355.0 / 113.0, 1.0).unwrap();
        assert!(rationality_warning(&sc, 100).is_none());
        let w = rationality_warning(&sc, 1000).unwrap();
        assert_eq!((w.p, w.q), (355, 113));
    }
}
