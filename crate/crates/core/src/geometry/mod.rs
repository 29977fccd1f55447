//! Planar geometry kernel: squares to polygons, boolean union with boundary
//! attribution, perimeter, area, ratio, and a Monte Carlo area oracle.

mod monte_carlo;
mod polygon;
mod union;

pub use monte_carlo::monte_carlo_area;
pub use polygon::{normalize_angle, Configuration, ConvexPolygon, Point, UnitSquare, SNAP_EPS};
pub use union::{union, union_convex, BoundarySegment, Hole, Region, StripClass};

use crate::error::Result;

/// The four CCW vertices of a unit square.
pub fn square_polygon(s: &UnitSquare) -> ConvexPolygon {
    s.polygon()
}

pub fn area(r: &Region) -> f64 {
    r.area()
}

pub fn perimeter(r: &Region) -> f64 {
    r.perimeter()
}

/// Perimeter-to-area ratio of the union of a configuration.
pub fn ratio(c: &Configuration) -> Result<f64> {
    Ok(union(c)?.ratio())
}
