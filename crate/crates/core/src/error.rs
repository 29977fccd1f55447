use thiserror::Error;

/// Errors produced by the geometry kernel and the analytic modules.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the documented domain of an operation.
    #[error("domain violation in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// A configuration failed a structural invariant (empty, oriented flag
    /// inconsistent with the angles, non-finite coordinates).
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    /// The union kernel could not resolve a degenerate overlap. Carries the
    /// coordinates that triggered the failure.
    #[error("geometry robustness failure near ({x}, {y}): {detail}")]
    Robustness { x: f64, y: f64, detail: String },

    /// Adaptive quadrature stopped before reaching the requested tolerance.
    #[error("quadrature did not converge: requested {requested}, achieved {achieved}")]
    QuadratureNonConvergence { requested: f64, achieved: f64 },

    /// An operation that requires an axis-oriented input was given a rotated one.
    #[error("operation requires an oriented configuration: {0}")]
    NotOriented(String),
}

pub type Result<T> = std::result::Result<T, Error>;
