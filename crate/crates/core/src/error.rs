use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid scheme: {0}")]
    InvalidScheme(String),

    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// `|λ*|` vanished for a structured slope, which only happens when
    /// `tanθ` is (numerically) rational.
    #[error(
        "lambda* = {lambda_star:e} is below tolerance; tan(theta) is effectively rational for slope ({a}, {b}, {d})"
    )]
    DegenerateLambdaStar { a: i64, b: i64, d: i64, lambda_star: f64 },

    #[error("closure is only defined in the stripes regime (epsilon*|lambda*| = {product} >= 1)")]
    NotStriped { product: f64 },

    #[error("suspension dynamics require epsilon = cos(theta) + sin(theta), got epsilon = {epsilon} vs {balanced}")]
    UnbalancedWindow { epsilon: f64, balanced: f64 },

    #[error("enumeration needs {needed} candidate lattice pairs, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
