//! Suspension dynamics over the two-interval exchange, for the balanced
//! window `ε = cosθ + sinθ`.
//!
//! With that window consecutive points of `Λ_F` differ by `cosθ` or `sinθ`
//! depending on which piece of `[0, cosθ) ∪ [cosθ, cosθ + sinθ)` the
//! internal coordinate lies in. Stacking the gaps as fibres over the
//! internal coordinate gives the phase space
//! `X = ⋃ [piece] × [0, 1/d] × [0, gap]`. Following a line of slope `λ/d`
//! through `X` and recording where it crosses the base `M = [0, cosθ +
//! sinθ) × [0, 1/d)` yields a piecewise translation of `M` whose orbits
//! stay on the lines `L_α : η = α − (λ*/d)ξ mod 1/d`.

mod walk;

use serde::{Deserialize, Serialize};

pub use walk::ModelSetWalk;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_model_set, Budget};
use crate::numfmt::serialize_g17;
use crate::scheme::Scheme;
use crate::slope::Structured;
use crate::BOUNDARY_TOL;

/// Checks the standing assumption `ε = cosθ + sinθ` (within `1e-12`).
pub fn require_balanced(scheme: &Scheme) -> Result<()> {
    if scheme.is_balanced() {
        Ok(())
    } else {
        Err(Error::UnbalancedWindow { epsilon: scheme.epsilon(), balanced: scheme.balanced_epsilon() })
    }
}

/// `v mod 1/d` via `frac(v·d)/d`; results within `1e-12` of `1/d` snap to 0.
pub fn reduce_mod_inv(v: f64, d: i64) -> f64 {
    let scaled = v * d as f64;
    let r = (scaled - scaled.floor()) / d as f64;
    if r < 0.0 || r >= 1.0 / d as f64 - BOUNDARY_TOL {
        0.0
    } else {
        r
    }
}

/// Distance from `v` to the nearest multiple of `1/d`.
pub fn circular_distance(v: f64, d: i64) -> f64 {
    let r = reduce_mod_inv(v, d);
    r.min(1.0 / d as f64 - r)
}

/// True when `x*` lies in the first piece `[0, cosθ)`; `x* = cosθ`
/// belongs to the second piece.
#[inline]
fn in_first_piece(scheme: &Scheme, x_star: f64) -> bool {
    x_star < scheme.cos_theta() - BOUNDARY_TOL
}

/// Gap `(x_{j+1} − x_j, x*_{j+1} − x*_j)` following a point of `Λ_F` with
/// internal coordinate `x_star`.
pub fn step_gap(x_star: f64, scheme: &Scheme) -> Result<(f64, f64)> {
    require_balanced(scheme)?;
    if !scheme.in_window(x_star) {
        return Err(Error::InvalidArgument(format!("x* = {x_star} is outside the window [0, {})", scheme.epsilon())));
    }
    let (c, s) = (scheme.cos_theta(), scheme.sin_theta());
    Ok(if in_first_piece(scheme, x_star) { (c, s) } else { (s, -c) })
}

/// A point `(ξ, η, ζ)` of the suspension space `X`, stored as its canonical
/// representative: `η ∈ [0, 1/d)` and `ζ` strictly below the fibre height
/// over `ξ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuspensionState {
    #[serde(serialize_with = "serialize_g17")]
    pub xi: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub eta: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub zeta: f64,
}

impl SuspensionState {
    /// Applies the gluings `(ξ, η, 0) ~ (ξ, η, ceiling)` shifted to the next
    /// piece, and `η ~ η + 1/d`.
    pub fn canonical(scheme: &Scheme, d: i64, mut xi: f64, eta: f64, mut zeta: f64) -> Self {
        let (c, s) = (scheme.cos_theta(), scheme.sin_theta());
        zeta = zeta.max(0.0);
        loop {
            let first = in_first_piece(scheme, xi);
            let ceiling = if first { c } else { s };
            if zeta < ceiling - BOUNDARY_TOL {
                break;
            }
            zeta = (zeta - ceiling).max(0.0);
            xi = if first { xi + s } else { xi - c };
            xi = snap_base(scheme, xi);
        }
        Self { xi, eta: reduce_mod_inv(eta, d), zeta }
    }
}

/// A point `(ξ, η)` of the base `M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BaseState {
    #[serde(serialize_with = "serialize_g17")]
    pub xi: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub eta: f64,
}

impl BaseState {
    pub fn new(xi: f64, eta: f64) -> Self {
        Self { xi, eta }
    }
}

/// Maps `ξ` into `[0, cosθ + sinθ)`, absorbing rounding at either end.
fn snap_base(scheme: &Scheme, xi: f64) -> f64 {
    let period = scheme.balanced_epsilon();
    if xi.abs() <= BOUNDARY_TOL || (period - xi).abs() <= BOUNDARY_TOL {
        0.0
    } else {
        xi.rem_euclid(period)
    }
}

/// The card-album map `φ(x, y) = (x_j*, y mod 1/d, x − x_j)` for
/// `x_j ≤ x < x_{j+1}`.
pub fn album_map(x: f64, y: f64, scheme: &Scheme, d: i64, budget: Budget) -> Result<SuspensionState> {
    require_balanced(scheme)?;
    if d < 1 {
        return Err(Error::InvalidArgument(format!("d must be positive, got {d}")));
    }
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::InvalidArgument("album map needs a finite point".into()));
    }
    // gaps are at most max(cosθ, sinθ) < cosθ + sinθ
    let reach = scheme.balanced_epsilon();
    let points = enumerate_model_set(scheme, x - reach, x + BOUNDARY_TOL, budget)?;
    let xj = points
        .iter()
        .rev()
        .find(|p| p.x <= x + BOUNDARY_TOL)
        .expect("a model set point lies within one gap to the left");
    Ok(SuspensionState::canonical(scheme, d, xj.x_star, y, x - xj.x))
}

/// One step of an orbit: the base point after `step` returns and the
/// distance of `η + (λ*/d)ξ` from `α` modulo `1/d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub step: u64,
    #[serde(serialize_with = "serialize_g17")]
    pub xi: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub eta: f64,
    #[serde(serialize_with = "serialize_g17")]
    pub invariant_residual: f64,
}

/// The return map on the base `M` for lines of slope `λ/d`.
#[derive(Debug, Clone, Copy)]
pub struct Suspension {
    scheme: Scheme,
    slope: Structured,
    lambda: f64,
    lambda_star: f64,
}

impl Suspension {
    pub fn new(scheme: Scheme, slope: Structured) -> Result<Self> {
        require_balanced(&scheme)?;
        let lambda_star = slope.lambda_star(&scheme);
        if lambda_star.abs() < BOUNDARY_TOL {
            return Err(Error::DegenerateLambdaStar { a: slope.a(), b: slope.b(), d: slope.d(), lambda_star });
        }
        Ok(Self { scheme, slope, lambda: slope.lambda(&scheme), lambda_star })
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn slope(&self) -> &Structured {
        &self.slope
    }

    fn d(&self) -> i64 {
        self.slope.d()
    }

    /// The interval exchange on `M`: `(ξ + sinθ, η + (λ/d)cosθ)` on the
    /// first piece and `(ξ − cosθ, η + (λ/d)sinθ)` on the second.
    pub fn poincare_step(&self, state: BaseState) -> BaseState {
        let (c, s) = (self.scheme.cos_theta(), self.scheme.sin_theta());
        let rate = self.lambda / self.d() as f64;
        let (xi, deta) =
            if in_first_piece(&self.scheme, state.xi) { (state.xi + s, rate * c) } else { (state.xi - c, rate * s) };
        BaseState { xi: snap_base(&self.scheme, xi), eta: reduce_mod_inv(state.eta + deta, self.d()) }
    }

    /// Height of `L_α` over `ξ`: `α − (λ*/d)ξ mod 1/d`.
    pub fn l_alpha_eval(&self, alpha: f64, xi: f64) -> f64 {
        reduce_mod_inv(alpha - self.lambda_star / self.d() as f64 * xi, self.d())
    }

    /// The intercept class `α = (λ*/d)x* mod 1/d` whose line `L_α` passes
    /// through `(x*, 0)`.
    pub fn lemma4_alpha(&self, x_star: f64) -> f64 {
        reduce_mod_inv(self.lambda_star / self.d() as f64 * x_star, self.d())
    }

    /// [`Self::lemma4_alpha`] at the `j`-th point of `Λ_F` (`x_0 = 0`).
    pub fn lemma4_alpha_for_hit(&self, j: i64) -> f64 {
        let mut walk = ModelSetWalk::new(&self.scheme).expect("balanced scheme");
        walk.seek(j);
        self.lemma4_alpha(walk.x_star())
    }

    /// `(j, α_j)` for `|j| ≤ j_max`, walking outward from the origin once.
    pub fn lemma4_alphas(&self, j_max: u64) -> Vec<(i64, f64)> {
        let mut out = Vec::with_capacity(2 * j_max as usize + 1);
        let mut fwd = ModelSetWalk::new(&self.scheme).expect("balanced scheme");
        let mut back = fwd.clone();
        out.push((0, self.lemma4_alpha(fwd.x_star())));
        for _ in 0..j_max {
            fwd.advance();
            back.retreat();
            out.push((fwd.index(), self.lemma4_alpha(fwd.x_star())));
            out.push((back.index(), self.lemma4_alpha(back.x_star())));
        }
        out.sort_by_key(|(j, _)| *j);
        out
    }

    /// Distance of `η + (λ*/d)ξ` from `α` on the circle of length `1/d`.
    pub fn invariant_residual(&self, state: BaseState, alpha: f64) -> f64 {
        circular_distance(state.eta + self.lambda_star / self.d() as f64 * state.xi - alpha, self.d())
    }

    /// The orbit of `(0, α)`, recomputed from lattice integers at every
    /// step: after `j` returns the base point is `(x_j*, α + λx_j/d)`.
    pub fn orbit(&self, alpha: f64) -> Orbit<'_> {
        Orbit { suspension: self, walk: ModelSetWalk::new(&self.scheme).expect("balanced scheme"), alpha, step: 0 }
    }
}

/// Iterator over [`OrbitRecord`]s; see [`Suspension::orbit`].
#[derive(Debug, Clone)]
pub struct Orbit<'a> {
    suspension: &'a Suspension,
    walk: ModelSetWalk,
    alpha: f64,
    step: u64,
}

impl Iterator for Orbit<'_> {
    type Item = OrbitRecord;

    fn next(&mut self) -> Option<OrbitRecord> {
        let sus = self.suspension;
        let d = sus.d();
        let state = BaseState {
            xi: self.walk.x_star(),
            eta: reduce_mod_inv(self.alpha + sus.lambda * self.walk.x() / d as f64, d),
        };
        let record = OrbitRecord {
            step: self.step,
            xi: state.xi,
            eta: state.eta,
            invariant_residual: sus.invariant_residual(state, self.alpha),
        };
        self.walk.advance();
        self.step += 1;
        Some(record)
    }
}
