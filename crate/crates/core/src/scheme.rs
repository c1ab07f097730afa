//! The cut-and-project scheme: rotation angle and window `[0, ε)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfmt::serialize_g17;
use crate::BOUNDARY_TOL;

/// Ways of specifying the rotation angle θ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Angle {
    Tan(f64),
    Degrees(f64),
    Radians(f64),
    CosSin { cos: f64, sin: f64 },
}

/// Rotation `(cosθ, sinθ)` in the open first quadrant plus window length ε.
///
/// The lattice is `D = {(m cosθ − n sinθ, k, m sinθ + n cosθ)}` and the
/// model set keeps the points whose internal coordinate lies in `[0, ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SchemeSpec", into = "SchemeSpec")]
pub struct Scheme {
    cos_theta: f64,
    sin_theta: f64,
    epsilon: f64,
}

impl Scheme {
    pub fn new(angle: Angle, epsilon: f64) -> Result<Self> {
        match angle {
            Angle::Tan(t) => Self::from_tan(t, epsilon),
            Angle::Degrees(deg) => Self::from_radians(deg.to_radians(), epsilon),
            Angle::Radians(rad) => Self::from_radians(rad, epsilon),
            Angle::CosSin { cos, sin } => Self::from_cos_sin(cos, sin, epsilon),
        }
    }

    /// Takes `(cosθ, sinθ)` verbatim; they must already lie on the unit
    /// circle to within `1e-12`.
    pub fn from_cos_sin(cos_theta: f64, sin_theta: f64, epsilon: f64) -> Result<Self> {
        if !(cos_theta.is_finite() && sin_theta.is_finite()) {
            return Err(Error::InvalidScheme("cos/sin must be finite".into()));
        }
        if !(cos_theta > 0.0 && cos_theta < 1.0 && sin_theta > 0.0 && sin_theta < 1.0) {
            return Err(Error::InvalidScheme(format!(
                "angle must lie strictly inside the first quadrant (cos = {cos_theta}, sin = {sin_theta})"
            )));
        }
        let norm = cos_theta * cos_theta + sin_theta * sin_theta;
        if (norm - 1.0).abs() > BOUNDARY_TOL {
            return Err(Error::InvalidScheme(format!("cos^2 + sin^2 = {norm}, expected 1 within {BOUNDARY_TOL:e}")));
        }
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidScheme(format!("epsilon must be positive, got {epsilon}")));
        }
        Ok(Self { cos_theta, sin_theta, epsilon })
    }

    pub fn from_tan(tan_theta: f64, epsilon: f64) -> Result<Self> {
        if !(tan_theta.is_finite() && tan_theta > 0.0) {
            return Err(Error::InvalidScheme(format!("tan(theta) must be positive, got {tan_theta}")));
        }
        let cos = 1.0 / tan_theta.hypot(1.0);
        Self::from_cos_sin(cos, tan_theta * cos, epsilon)
    }

    pub fn from_radians(theta: f64, epsilon: f64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::InvalidScheme("theta must be finite".into()));
        }
        let (sin, cos) = theta.sin_cos();
        Self::from_cos_sin(cos, sin, epsilon)
    }

    /// θ = π/6 built from `√3/2` and `1/2` without trigonometric calls, so
    /// results are bit-identical across platforms.
    pub fn thirty_degrees(epsilon: f64) -> Result<Self> {
        Self::from_cos_sin(3f64.sqrt() / 2.0, 0.5, epsilon)
    }

    /// The Fibonacci scheme, `tanθ = (√5 − 1)/2`.
    pub fn fibonacci(epsilon: f64) -> Result<Self> {
        Self::from_tan((5f64.sqrt() - 1.0) / 2.0, epsilon)
    }

    /// Same angle, different window.
    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        Self::from_cos_sin(self.cos_theta, self.sin_theta, epsilon)
    }

    /// Same angle with the balanced window `ε = cosθ + sinθ`.
    pub fn balanced(&self) -> Self {
        Self { epsilon: self.balanced_epsilon(), ..*self }
    }

    #[inline]
    pub fn cos_theta(&self) -> f64 {
        self.cos_theta
    }

    #[inline]
    pub fn sin_theta(&self) -> f64 {
        self.sin_theta
    }

    #[inline]
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn tan_theta(&self) -> f64 {
        self.sin_theta / self.cos_theta
    }

    pub fn balanced_epsilon(&self) -> f64 {
        self.cos_theta + self.sin_theta
    }

    pub fn is_balanced(&self) -> bool {
        (self.epsilon - self.balanced_epsilon()).abs() <= BOUNDARY_TOL
    }

    /// Physical coordinate `x = m cosθ − n sinθ`.
    #[inline]
    pub fn physical(&self, m: i64, n: i64) -> f64 {
        m as f64 * self.cos_theta - n as f64 * self.sin_theta
    }

    /// Internal coordinate `x* = m sinθ + n cosθ`.
    #[inline]
    pub fn internal(&self, m: i64, n: i64) -> f64 {
        m as f64 * self.sin_theta + n as f64 * self.cos_theta
    }

    /// Window membership `0 ≤ x* < ε`, boundaries snapped at `1e-12`.
    #[inline]
    pub fn in_window(&self, x_star: f64) -> bool {
        x_star >= -BOUNDARY_TOL && x_star < self.epsilon - BOUNDARY_TOL
    }
}

/// JSON form of a scheme.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeSpec {
    pub theta: ThetaSpec,
    #[serde(serialize_with = "serialize_g17")]
    pub epsilon: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum ThetaSpec {
    Tan {
        #[serde(serialize_with = "serialize_g17")]
        tan: f64,
    },
    Degrees {
        #[serde(serialize_with = "serialize_g17")]
        degrees: f64,
    },
    Radians {
        #[serde(serialize_with = "serialize_g17")]
        radians: f64,
    },
    CosSin {
        #[serde(serialize_with = "serialize_g17")]
        cos: f64,
        #[serde(serialize_with = "serialize_g17")]
        sin: f64,
    },
}

impl From<ThetaSpec> for Angle {
    fn from(t: ThetaSpec) -> Self {
        match t {
            ThetaSpec::Tan { tan } => Angle::Tan(tan),
            ThetaSpec::Degrees { degrees } => Angle::Degrees(degrees),
            ThetaSpec::Radians { radians } => Angle::Radians(radians),
            ThetaSpec::CosSin { cos, sin } => Angle::CosSin { cos, sin },
        }
    }
}

impl TryFrom<SchemeSpec> for Scheme {
    type Error = Error;

    fn try_from(spec: SchemeSpec) -> Result<Self> {
        Scheme::new(spec.theta.into(), spec.epsilon)
    }
}

impl From<Scheme> for SchemeSpec {
    fn from(s: Scheme) -> Self {
        SchemeSpec { theta: ThetaSpec::CosSin { cos: s.cos_theta, sin: s.sin_theta }, epsilon: s.epsilon }
    }
}
