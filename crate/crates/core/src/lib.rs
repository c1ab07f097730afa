//! Cut-and-project sets `Λ = Λ_F × ℤ` in the plane and the line families
//! `Λ + wℝ` they generate.
//!
//! The crate is organised around four pieces:
//!
//! * [`scheme`], [`lattice`], [`slope`], [`closure`], [`trace`],
//!   [`kronecker`] and [`rationality`] build the model set from integer
//!   lattice data, classify a slope as discrete, dense or striped, compute
//!   the closed stripe set on the vertical axis, and provide brute-force
//!   oracles that check it.
//! * [`suspension`] is the two-interval exchange on the base of the
//!   suspension flow, an independent dynamical route to the same stripes
//!   for the balanced window `ε = cosθ + sinθ`.
//! * [`render`] collects and draws line families as deterministic SVG.
//! * [`checks`] runs the acceptance criteria and reports one line each.
//!
//! Every real coordinate is a derived view of integers `(m, n, k)` and
//! `(a, b, d)`; nothing is accumulated in floating point across steps.

pub mod checks;
pub mod closure;
pub mod error;
pub mod kronecker;
pub mod lattice;
pub mod numfmt;
pub mod rationality;
pub mod render;
pub mod scheme;
pub mod slope;
pub mod suspension;
pub mod trace;

pub use closure::{closure_on_axis, Interval, IntervalSet};
pub use error::{Error, Result};
pub use kronecker::{kronecker_density_check, KroneckerProbe};
pub use lattice::{enumerate_model_set, star, Budget, LatticePoint, ModelSetPoint};
pub use rationality::{rationality_warning, RationalityWarning};
pub use scheme::{Angle, Scheme};
pub use slope::{classify_slope, Classification, DenseReason, Slope, StripeParams, Structured};
pub use trace::{trace_axis_intercepts, AxisTrace, Intercept};

/// Tolerance for comparisons against window and interval boundaries.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Default number of candidate lattice pairs an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
