//! Lattice points and enumeration of the model set `Λ_F`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfmt::serialize_g17;
use crate::scheme::Scheme;
use crate::{BOUNDARY_TOL, DEFAULT_BUDGET};

/// Integer lattice coordinates `(m, n, k)`. Real coordinates are always
/// recomputed from these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub m: i64,
    pub n: i64,
    pub k: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { m: 0, n: 0, k: 0 };

    pub fn new(m: i64, n: i64, k: i64) -> Self {
        Self { m, n, k }
    }

    pub fn physical(&self, scheme: &Scheme) -> f64 {
        scheme.physical(self.m, self.n)
    }

    pub fn internal(&self, scheme: &Scheme) -> f64 {
        scheme.internal(self.m, self.n)
    }

    pub fn with_height(self, k: i64) -> Self {
        Self { k, ..self }
    }
}

/// The star map `x* = m sinθ + n cosθ`.
pub fn star(m: i64, n: i64, scheme: &Scheme) -> f64 {
    scheme.internal(m, n)
}

/// A point of `Λ_F` (height `k = 0`) with its coordinates evaluated from
/// the integers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelSetPoint {
    pub lattice: LatticePoint,
    #[serde(serialize_with = "serialize_g17")]
    pub x: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub x_star: f64,
}

impl ModelSetPoint {
    /// Evaluates the coordinates of `(m, n)`; `None` when `x*` is outside
    /// the window.
    pub fn from_integers(scheme: &Scheme, m: i64, n: i64) -> Option<Self> {
        let x_star = scheme.internal(m, n);
        scheme.in_window(x_star).then(|| Self { lattice: LatticePoint::new(m, n, 0), x: scheme.physical(m, n), x_star })
    }

    pub fn m(&self) -> i64 {
        self.lattice.m
    }

    pub fn n(&self) -> i64 {
        self.lattice.n
    }
}

/// Upper bound on candidate `(m, n)` pairs an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }
}

/// Row-by-row sweep of the `(m, n)` search box for `x ∈ [x_min, x_max]`,
/// `x* ∈ [0, ε)`.
///
/// Inverting the rotation gives `m = x cosθ + x* sinθ` and
/// `n = −x sinθ + x* cosθ`; the corners of the `(x, x*)` rectangle bound
/// `m`. For each `m` the window pins `n` to a short range of length about
/// `ε / cosθ`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchBox {
    m_lo: i64,
    m_hi: i64,
    n_per_row: u64,
}

impl SearchBox {
    pub(crate) fn new(scheme: &Scheme, x_min: f64, x_max: f64) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(Error::InvalidArgument("range bounds must be finite".into()));
        }
        if x_min > x_max {
            return Err(Error::InvalidArgument(format!("empty range [{x_min}, {x_max}]")));
        }
        let (c, s, eps) = (scheme.cos_theta(), scheme.sin_theta(), scheme.epsilon());
        // m is increasing in both x and x*, so the extremes sit at opposite corners.
        let m_lo = (x_min * c).floor() - 1.0;
        let m_hi = (x_max * c + eps * s).ceil() + 1.0;
        if m_lo < -(i64::MAX as f64) / 4.0 || m_hi > (i64::MAX as f64) / 4.0 {
            return Err(Error::BudgetExceeded { needed: u64::MAX, budget: 0 });
        }
        let n_per_row = (eps / c).ceil() as u64 + 5;
        Ok(Self { m_lo: m_lo as i64, m_hi: m_hi as i64, n_per_row })
    }

    pub(crate) fn candidates(&self) -> u64 {
        ((self.m_hi - self.m_lo + 1) as u64).saturating_mul(self.n_per_row)
    }

    pub(crate) fn check(&self, budget: Budget) -> Result<()> {
        let needed = self.candidates();
        if needed > budget.0 {
            return Err(Error::BudgetExceeded { needed, budget: budget.0 });
        }
        Ok(())
    }

    /// Calls `visit` for every `(m, n)` in the window, in increasing `m`.
    pub(crate) fn for_each_in_window(&self, scheme: &Scheme, mut visit: impl FnMut(ModelSetPoint)) {
        let (c, s, eps) = (scheme.cos_theta(), scheme.sin_theta(), scheme.epsilon());
        for m in self.m_lo..=self.m_hi {
            let ms = m as f64 * s;
            let n_lo = ((-ms) / c).floor() as i64 - 1;
            let n_hi = ((eps - ms) / c).ceil() as i64 + 1;
            for n in n_lo..=n_hi {
                if let Some(p) = ModelSetPoint::from_integers(scheme, m, n) {
                    visit(p);
                }
            }
        }
    }
}

/// All points of `Λ_F` with `x ∈ [x_min, x_max]`, strictly increasing in `x`.
pub fn enumerate_model_set(scheme: &Scheme, x_min: f64, x_max: f64, budget: Budget) -> Result<Vec<ModelSetPoint>> {
    if x_min >= x_max {
        return Err(Error::InvalidArgument(format!("enumeration range needs x_min < x_max, got [{x_min}, {x_max}]")));
    }
    let search = SearchBox::new(scheme, x_min, x_max)?;
    search.check(budget)?;
    let mut points = Vec::new();
    search.for_each_in_window(scheme, |p| {
        if p.x >= x_min && p.x <= x_max {
            points.push(p);
        }
    });
    points.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.lattice.cmp(&b.lattice)));
    debug_assert!(points.windows(2).all(|w| w[1].x - w[0].x > BOUNDARY_TOL));
    Ok(points)
}
