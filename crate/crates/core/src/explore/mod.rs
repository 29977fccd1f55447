//! Named example configurations, the optimality filter for candidate
//! counterexamples, and the ratio-maximizing search.

mod search;

pub use search::{search, SearchReport, SearchSettings};

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use crate::error::{Error, Result};
use crate::geometry::{union, union_convex, Configuration, ConvexPolygon, Point, UnitSquare};

/// Clipped-square pair: a unit square with a corner triangle of leg `x`
/// removed, together with its half-turn image. Each clipped piece has ratio
/// below 4 while their union is the full square with ratio exactly 4.
///
/// Returns `(e1_ratio, union_ratio)`.
pub fn clipped_square_pair(x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0 && x < 0.5) {
        return Err(Error::Domain {
            op: "clipped_square_pair",
            detail: format!("x = {} outside (0, 0.5)", x),
        });
    }
    let e1 = clipped_unit_square(x)?;
    let e2_verts = e1.vertices().iter().map(|p| Point::new(-p.x, -p.y)).collect();
    let e2 = ConvexPolygon::new(e2_verts)?;
    let e1_ratio = e1.perimeter() / e1.signed_area();
    let union_ratio = union_convex(&[e1, e2])?.ratio();
    Ok((e1_ratio, union_ratio))
}

/// Unit square centered at the origin with an isoceles right triangle of leg
/// `x` clipped from the corner at (1/2, 1/2). Perimeter 4 - x(2 - sqrt 2),
/// area 1 - x^2/2.
fn clipped_unit_square(x: f64) -> Result<ConvexPolygon> {
    ConvexPolygon::new(vec![
        Point::new(-0.5, -0.5),
        Point::new(0.5, -0.5),
        Point::new(0.5, 0.5 - x),
        Point::new(0.5 - x, 0.5),
        Point::new(-0.5, 0.5),
    ])
}

/// Incremental-method counterexample: an existing figure covers all of the
/// incoming axis-aligned square except the corner triangle with legs `b`, so
/// the step ratio is (4 - 2 sqrt 2)/b — unbounded as b shrinks.
///
/// The covering figure uses two axis-aligned squares for the body and two
/// 45-degree squares whose shared edge carries the diagonal cut; a single
/// rotated unit square cannot span the whole diagonal for every `b`.
pub fn corner_triangle_delta(b: f64) -> Result<f64> {
    if !(b > 0.0 && b < 1.0) {
        return Err(Error::Domain {
            op: "corner_triangle_delta",
            detail: format!("b = {} outside (0, 1)", b),
        });
    }
    let base = corner_triangle_base(b)?;
    let before = union(&base)?;
    let mut extended = base;
    extended.squares.push(UnitSquare::axis_aligned(0.5, 0.5));
    let after = union(&extended)?;
    let delta_p = after.perimeter() - before.perimeter();
    let delta_a = after.area() - before.area();
    Ok(delta_p / delta_a)
}

fn corner_triangle_base(b: f64) -> Result<Configuration> {
    // Axis-aligned body: everything of [0,1]^2 with x >= b or y >= b.
    let a1 = UnitSquare::axis_aligned(0.5, b + 0.5);
    let a2 = UnitSquare::axis_aligned(b + 0.5, 0.5);
    // Two diagonal squares with an edge on the cut line x + y = b, centered
    // at offsets +-0.3 along the line so together they cover the wedge
    // between the cut and the body for every b in (0, 1).
    let diagonal = |along: f64| {
        let qx = b / 2.0 + along / SQRT_2;
        let qy = b / 2.0 - along / SQRT_2;
        UnitSquare::new(qx + 0.5 / SQRT_2, qy + 0.5 / SQRT_2, FRAC_PI_4)
    };
    Configuration::new(vec![a1, a2, diagonal(0.3), diagonal(-0.3)], false, "corner-triangle base")
}

/// `n` unit squares sharing the center (0, 0); the union ratio is 4 for any
/// choice of angles.
pub fn centered_family(thetas: &[f64]) -> Result<Configuration> {
    if thetas.is_empty() {
        return Err(Error::InvalidConfiguration("centered family needs n >= 1".into()));
    }
    let squares = thetas.iter().map(|&t| UnitSquare::new(0.0, 0.0, t)).collect();
    Configuration::new(squares, false, "centered family")
}

/// Shared area of each square with the rest of the figure:
/// alpha_i = a(H_i intersect (H \ H_i)).
#[derive(Debug, Clone)]
pub struct OverlapProfile {
    pub alphas: Vec<f64>,
}

pub fn overlap_profile(c: &Configuration) -> Result<OverlapProfile> {
    if c.len() < 2 {
        return Err(Error::Domain {
            op: "overlap_profile",
            detail: "need at least 2 squares".into(),
        });
    }
    let total = union(c)?.area();
    let mut alphas = Vec::with_capacity(c.len());
    for i in 0..c.len() {
        let mut rest = c.clone();
        rest.squares.remove(i);
        rest.oriented = false;
        let rest_area = union(&rest)?.area();
        // a(H_i) - (a(H) - a(H \ H_i)) with a(H_i) = 1
        alphas.push(1.0 - total + rest_area);
    }
    Ok(OverlapProfile { alphas })
}

/// Ratio bound for removing one square that shares area `alpha` with the
/// rest: (4 - 2 sqrt(pi alpha)) / (1 - alpha), at most 4 on [0, pi/4].
pub fn isoperimetric_removal_bound(alpha: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_4).contains(&alpha) {
        return Err(Error::Domain {
            op: "isoperimetric_removal_bound",
            detail: format!("alpha = {} outside [0, pi/4]", alpha),
        });
    }
    Ok((4.0 - 2.0 * (PI * alpha).sqrt()) / (1.0 - alpha))
}

/// A configuration can only be an optimal counterexample if every square
/// shares more than pi/4 of its area with the rest. Returns the verdict and
/// the first failing square, if any.
pub fn optimality_filter(c: &Configuration) -> Result<(bool, Option<usize>)> {
    let profile = overlap_profile(c)?;
    for (i, &alpha) in profile.alphas.iter().enumerate() {
        if alpha <= FRAC_PI_4 {
            return Ok((false, Some(i)));
        }
    }
    Ok((true, None))
}

/// Union ratio of unit circles approximated by inscribed regular k-gons.
/// A single k-gon has ratio exactly 2/cos(pi/k), approaching the circle
/// bound 2 as k grows.
pub fn circle_union_check(centers: &[Point], k: usize) -> Result<f64> {
    if k < 16 {
        return Err(Error::Domain {
            op: "circle_union_check",
            detail: format!("k = {} must be at least 16", k),
        });
    }
    if centers.is_empty() {
        return Err(Error::InvalidConfiguration("no circle centers".into()));
    }
    let polys: Vec<ConvexPolygon> = centers
        .iter()
        .map(|c| {
            let verts = (0..k)
                .map(|j| {
                    let a = 2.0 * PI * j as f64 / k as f64;
                    Point::new(c.x + a.cos(), c.y + a.sin())
                })
                .collect();
            ConvexPolygon::new(verts)
        })
        .collect::<Result<_>>()?;
    Ok(union_convex(&polys)?.ratio())
}
