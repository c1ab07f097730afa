//! Slopes `w = (1, s)` and the discrete / dense / stripes classification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfmt::serialize_g17;
use crate::scheme::Scheme;
use crate::BOUNDARY_TOL;

/// A slope `λ/d` with `λ = a cosθ − b sinθ`, stored in lowest terms with
/// `d > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "StructuredSpec", into = "StructuredSpec")]
pub struct Structured {
    a: i64,
    b: i64,
    d: i64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructuredSpec {
    pub a: i64,
    pub b: i64,
    pub d: i64,
}

fn gcd(mut x: i64, mut y: i64) -> i64 {
    x = x.abs();
    y = y.abs();
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

impl Structured {
    /// Normalises `(a, b, d)`: divides out `gcd(|a|, |b|, |d|)` and moves
    /// the sign of `d` into `a` and `b`.
    pub fn new(a: i64, b: i64, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidSlope(
                "d = 0 would be a vertical direction; only w = (1, s) is supported".into(),
            ));
        }
        if a == 0 && b == 0 {
            return Err(Error::InvalidSlope("(a, b) = (0, 0) is the horizontal slope; use Horizontal".into()));
        }
        if [a, b, d].contains(&i64::MIN) {
            return Err(Error::InvalidSlope("coefficient out of range".into()));
        }
        let g = gcd(gcd(a, b), d);
        let sign = d.signum();
        Ok(Self { a: sign * a / g, b: sign * b / g, d: sign * d / g })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `λ = a cosθ − b sinθ`, the physical image of `(a, b)`.
    pub fn lambda(&self, scheme: &Scheme) -> f64 {
        scheme.physical(self.a, self.b)
    }

    /// `λ* = a sinθ + b cosθ`, the internal image of `(a, b)`.
    pub fn lambda_star(&self, scheme: &Scheme) -> f64 {
        scheme.internal(self.a, self.b)
    }

    /// The slope value `λ/d`.
    pub fn value(&self, scheme: &Scheme) -> f64 {
        self.lambda(scheme) / self.d as f64
    }

    /// The y-intercept `k − (λ/d)·x` of the line through the lattice point
    /// `(m, n, k)`, evaluated through the integer split
    /// `k − (am + bn)/d + λ*·x*/d`.
    pub fn intercept(&self, scheme: &Scheme, m: i64, n: i64, k: i64) -> f64 {
        let integer = (k as i128) * (self.d as i128) - (self.a as i128 * m as i128 + self.b as i128 * n as i128);
        let d = self.d as f64;
        integer as f64 / d + self.lambda_star(scheme) * scheme.internal(m, n) / d
    }
}

impl TryFrom<StructuredSpec> for Structured {
    type Error = Error;

    fn try_from(s: StructuredSpec) -> Result<Self> {
        Structured::new(s.a, s.b, s.d)
    }
}

impl From<Structured> for StructuredSpec {
    fn from(s: Structured) -> Self {
        StructuredSpec { a: s.a, b: s.b, d: s.d }
    }
}

/// The direction `w = (1, s)` of a line family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slope {
    /// `s = λ/d` with declared arithmetic structure.
    Structured(Structured),
    /// A real slope asserted to lie outside `ℚ cosθ + ℚ sinθ`.
    Generic {
        #[serde(serialize_with = "serialize_g17")]
        s: f64,
    },
    /// `s = 0`.
    Horizontal,
}

impl Slope {
    pub fn structured(a: i64, b: i64, d: i64) -> Result<Self> {
        Structured::new(a, b, d).map(Slope::Structured)
    }

    pub fn generic(s: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::InvalidSlope(format!("slope must be finite, got {s}")));
        }
        if s == 0.0 {
            return Err(Error::InvalidSlope("slope 0 is the horizontal family; use Horizontal".into()));
        }
        Ok(Slope::Generic { s })
    }

    /// Numeric slope value.
    pub fn value(&self, scheme: &Scheme) -> f64 {
        match self {
            Slope::Structured(st) => st.value(scheme),
            Slope::Generic { s } => *s,
            Slope::Horizontal => 0.0,
        }
    }

    /// y-intercept of the line through `(x(m, n), k)`.
    pub fn intercept(&self, scheme: &Scheme, m: i64, n: i64, k: i64) -> f64 {
        match self {
            Slope::Structured(st) => st.intercept(scheme, m, n, k),
            Slope::Generic { s } => k as f64 - s * scheme.physical(m, n),
            Slope::Horizontal => k as f64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DenseReason {
    /// Slope declared outside `ℚ cosθ + ℚ sinθ`.
    GenericSlope,
    /// Structured slope with `ε·|λ*| ≥ 1`.
    WideWindow,
}

/// Parameters of the stripe regime: components of the closure on the
/// y-axis are intervals `[l, l + ελ*]/d` (orientation by the sign of λ*).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripeParams {
    pub d: i64,
    #[serde(serialize_with = "serialize_g17")]
    pub lambda_star: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub epsilon: f64,
}

impl StripeParams {
    /// Stripe width on the y-axis, `ε|λ*|/d`.
    pub fn width(&self) -> f64 {
        self.epsilon * self.lambda_star.abs() / self.d as f64
    }

    /// Distance between consecutive stripe left endpoints, `1/d`.
    pub fn spacing(&self) -> f64 {
        1.0 / self.d as f64
    }

    /// Signed offset `ελ*/d` from the lattice endpoint `l/d` to the other end.
    pub fn offset(&self) -> f64 {
        self.epsilon * self.lambda_star / self.d as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    /// Horizontal lines `y = k`.
    Discrete,
    Dense {
        reason: DenseReason,
    },
    Stripes(StripeParams),
}

/// Classifies the line family `Λ + wℝ`, `w = (1, s)`.
///
/// Horizontal slopes give the discrete family; generic slopes are dense.
/// A structured slope is dense when `ε ≥ 1/|λ*|` (the boundary counts as
/// dense) and striped otherwise.
pub fn classify_slope(scheme: &Scheme, slope: &Slope) -> Result<Classification> {
    match slope {
        Slope::Horizontal => Ok(Classification::Discrete),
        Slope::Generic { .. } => Ok(Classification::Dense { reason: DenseReason::GenericSlope }),
        Slope::Structured(st) => {
            let lambda_star = st.lambda_star(scheme);
            if lambda_star.abs() < BOUNDARY_TOL {
                return Err(Error::DegenerateLambdaStar { a: st.a, b: st.b, d: st.d, lambda_star });
            }
            if scheme.epsilon() * lambda_star.abs() >= 1.0 - BOUNDARY_TOL {
                Ok(Classification::Dense { reason: DenseReason::WideWindow })
            } else {
                Ok(Classification::Stripes(StripeParams { d: st.d, lambda_star, epsilon: scheme.epsilon() }))
            }
        }
    }
}
