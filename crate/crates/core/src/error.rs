use thiserror::Error;

use crate::optimize::CenterResult;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("polygon is self-intersecting: edges {first} and {second} cross")]
    SelfIntersecting { first: usize, second: usize },

    #[error("expected a triangle, got {0} vertices")]
    NotATriangle(usize),

    #[error("polygon is not convex")]
    NotConvex,

    #[error("height must be positive, got {0}")]
    NonpositiveHeight(f64),

    #[error("argument must be positive, got {0}")]
    NonpositiveArgument(f64),

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("invalid grid specification: {0}")]
    InvalidGrid(String),

    /// The inner solver ran out of iterations. The best iterate is attached
    /// with `converged == false`.
    #[error(
        "center solver did not converge after {} iterations (gradient norm {:.3e})",
        .0.iterations,
        .0.gradient_norm
    )]
    MaxIterations(Box<CenterResult>),

    /// No interior minimum of the height objective was found on the search
    /// ladder. `trace` holds every `(height, ratio)` pair evaluated.
    #[error("could not bracket a minimum of the ratio over height ({} samples)", .trace.len())]
    BracketingFailed { trace: Vec<(f64, f64)> },

    #[error("malformed polygon JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
