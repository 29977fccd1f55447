//! Executable certificates for the oriented-case arguments: strip averaging
//! over the four cardinal directions, the bump method for incremental steps,
//! and the boundary-strip classification with its inclusion/exclusion bound.

mod bump;
mod strip;
mod strips;

pub use bump::{bump_step, rectangle_ratio_check, BumpCase, BumpStep, Rect};
pub use strip::{strip_certificate, StripCertificate};
pub use strips::{classify_boundary_strips, strip_bound, StripClassification};

pub(crate) const CERT_TOL: f64 = 1e-9;
