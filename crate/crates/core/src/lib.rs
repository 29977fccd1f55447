//! Measures, certifies, and searches perimeter-to-area ratios of finite
//! unions of unit squares in the plane.
//!
//! - [`geometry`]: squares, boolean union with boundary attribution, area,
//!   perimeter, ratio, and a Monte Carlo area oracle.
//! - [`bounds`]: the thickness integral machinery behind the general ratio
//!   bound of about 5.55.
//! - [`certify`]: executable certificates for the oriented-case arguments.
//! - [`explore`]: named example configurations, the optimality filter, and
//!   the ratio-maximizing search.

pub mod bounds;
pub mod certify;
pub mod error;
pub mod explore;
pub mod format;
pub mod geometry;
pub mod svg;

pub use error::{Error, Result};
pub use geometry::{Configuration, Point, Region, UnitSquare};
