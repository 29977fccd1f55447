//! Points, convex polygons, and the unit square they are generated from.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Global snap tolerance for vertex coincidence and collinearity tests.
pub const SNAP_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

pub(crate) fn cross(ax: f64, ay: f64, bx: f64, by: f64) -> f64 {
    ax * by - ay * bx
}

/// A unit square given by its center and rotation angle. The angle is stored
/// normalized to [0, pi/2) since the square has 4-fold rotational symmetry.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct UnitSquare {
    #[serde(rename = "cx")]
    pub center_x: f64,
    #[serde(rename = "cy")]
    pub center_y: f64,
    #[serde(rename = "theta", default)]
    pub theta: f64,
}

impl UnitSquare {
    pub fn new(cx: f64, cy: f64, theta: f64) -> Self {
        UnitSquare {
            center_x: cx,
            center_y: cy,
            theta: normalize_angle(theta),
        }
    }

    pub fn axis_aligned(cx: f64, cy: f64) -> Self {
        UnitSquare::new(cx, cy, 0.0)
    }

    pub fn center(&self) -> Point {
        Point::new(self.center_x, self.center_y)
    }

    pub fn is_axis_aligned(&self) -> bool {
        self.theta.abs() < SNAP_EPS || (self.theta - std::f64::consts::FRAC_PI_2).abs() < SNAP_EPS
    }

    /// The four vertices as a CCW convex polygon.
    pub fn polygon(&self) -> ConvexPolygon {
        let (s, c) = self.theta.sin_cos();
        let corners = [(-0.5, -0.5), (0.5, -0.5), (0.5, 0.5), (-0.5, 0.5)];
        let verts = corners
            .iter()
            .map(|&(dx, dy)| {
                Point::new(
                    self.center_x + c * dx - s * dy,
                    self.center_y + s * dx + c * dy,
                )
            })
            .collect();
        ConvexPolygon { verts }
    }

    /// Whether `p` lies in the closed square, decided in the square's own frame.
    pub fn contains(&self, p: &Point) -> bool {
        let (s, c) = self.theta.sin_cos();
        let dx = p.x - self.center_x;
        let dy = p.y - self.center_y;
        let u = c * dx + s * dy;
        let v = -s * dx + c * dy;
        u.abs() <= 0.5 + SNAP_EPS && v.abs() <= 0.5 + SNAP_EPS
    }
}

/// Canonical representative of `theta` in [0, pi/2).
pub fn normalize_angle(theta: f64) -> f64 {
    let q = std::f64::consts::FRAC_PI_2;
    let mut t = theta % q;
    if t < 0.0 {
        t += q;
    }
    // rem_euclid can land exactly on the right endpoint through rounding
    if t >= q {
        t = 0.0;
    }
    t
}

/// A simple convex polygon with counter-clockwise vertices.
#[derive(Debug, Clone)]
pub struct ConvexPolygon {
    verts: Vec<Point>,
}

impl ConvexPolygon {
    /// Builds a polygon from CCW vertices, checking convexity and orientation.
    pub fn new(verts: Vec<Point>) -> Result<Self> {
        if verts.len() < 3 {
            return Err(Error::Domain {
                op: "ConvexPolygon::new",
                detail: format!("need at least 3 vertices, got {}", verts.len()),
            });
        }
        let n = verts.len();
        for i in 0..n {
            let a = verts[i];
            let b = verts[(i + 1) % n];
            let c = verts[(i + 2) % n];
            let turn = cross(b.x - a.x, b.y - a.y, c.x - b.x, c.y - b.y);
            if turn < -SNAP_EPS {
                return Err(Error::Domain {
                    op: "ConvexPolygon::new",
                    detail: format!("vertices not convex CCW at index {}", (i + 1) % n),
                });
            }
        }
        Ok(ConvexPolygon { verts })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn edge(&self, i: usize) -> (Point, Point) {
        (self.verts[i], self.verts[(i + 1) % self.verts.len()])
    }

    pub fn signed_area(&self) -> f64 {
        ring_signed_area(&self.verts)
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.verts.len();
        (0..n).map(|i| self.verts[i].dist(&self.verts[(i + 1) % n])).sum()
    }

    /// Closed containment test with the global snap tolerance.
    pub fn contains(&self, p: &Point) -> bool {
        self.side_margin(p) >= -SNAP_EPS
    }

    /// Strict interior test.
    pub fn contains_interior(&self, p: &Point) -> bool {
        self.side_margin(p) > SNAP_EPS
    }

    /// Minimum over edges of the (scaled) signed distance of `p` to the edge
    /// line, positive on the interior side.
    fn side_margin(&self, p: &Point) -> f64 {
        let n = self.verts.len();
        let mut margin = f64::INFINITY;
        for i in 0..n {
            let (a, b) = self.edge(i);
            let len = a.dist(&b);
            if len < SNAP_EPS {
                continue;
            }
            let d = cross(b.x - a.x, b.y - a.y, p.x - a.x, p.y - a.y) / len;
            margin = margin.min(d);
        }
        margin
    }

    /// Length of the open chord from `p` in direction `dir` (unit vector)
    /// through the polygon's interior. Returns 0 when the ray immediately
    /// leaves the polygon or runs along its boundary.
    pub fn chord_length(&self, p: &Point, dir: (f64, f64)) -> f64 {
        let mut t_enter: f64 = 0.0;
        let mut t_exit = f64::INFINITY;
        let n = self.verts.len();
        for i in 0..n {
            let (a, b) = self.edge(i);
            let len = a.dist(&b);
            if len < SNAP_EPS {
                continue;
            }
            // inward normal of the CCW edge
            let nx = -(b.y - a.y) / len;
            let ny = (b.x - a.x) / len;
            let num = nx * (p.x - a.x) + ny * (p.y - a.y);
            let den = nx * dir.0 + ny * dir.1;
            if den.abs() < 1e-15 {
                if num < -SNAP_EPS {
                    return 0.0; // parallel and outside
                }
                continue;
            }
            let t = -num / den;
            if den > 0.0 {
                t_enter = t_enter.max(t);
            } else {
                t_exit = t_exit.min(t);
            }
        }
        let len = t_exit - t_enter.max(0.0);
        if len <= SNAP_EPS {
            return 0.0;
        }
        // A chord that only grazes the boundary (e.g. a ray along an edge)
        // has no interior part.
        let mid = t_enter.max(0.0) + len / 2.0;
        let q = Point::new(p.x + mid * dir.0, p.y + mid * dir.1);
        if self.contains_interior(&q) {
            len
        } else {
            0.0
        }
    }
}

pub(crate) fn ring_signed_area(ring: &[Point]) -> f64 {
    let n = ring.len();
    let mut sum = 0.0;
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        sum += a.x * b.y - b.x * a.y;
    }
    sum / 2.0
}

pub(crate) fn ring_length(ring: &[Point]) -> f64 {
    let n = ring.len();
    (0..n).map(|i| ring[i].dist(&ring[(i + 1) % n])).sum()
}

/// An ordered list of unit squares: the unit of I/O and search.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Configuration {
    pub oriented: bool,
    #[serde(default)]
    pub label: String,
    pub squares: Vec<UnitSquare>,
}

impl Configuration {
    pub fn new(squares: Vec<UnitSquare>, oriented: bool, label: impl Into<String>) -> Result<Self> {
        let c = Configuration {
            oriented,
            label: label.into(),
            squares,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn oriented(squares: Vec<UnitSquare>, label: impl Into<String>) -> Result<Self> {
        Configuration::new(squares, true, label)
    }

    pub fn validate(&self) -> Result<()> {
        if self.squares.is_empty() {
            return Err(Error::InvalidConfiguration("no squares".into()));
        }
        for (i, s) in self.squares.iter().enumerate() {
            if !s.center_x.is_finite() || !s.center_y.is_finite() || !s.theta.is_finite() {
                return Err(Error::InvalidConfiguration(format!(
                    "square {} has non-finite parameters",
                    i
                )));
            }
            if self.oriented && s.theta.abs() > SNAP_EPS {
                return Err(Error::InvalidConfiguration(format!(
                    "oriented flag set but square {} has theta = {}",
                    i, s.theta
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mut c: Configuration = serde_json::from_str(text).map_err(|e| {
            Error::InvalidConfiguration(format!("malformed configuration JSON: {}", e))
        })?;
        for s in &mut c.squares {
            s.theta = normalize_angle(s.theta);
        }
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configuration serializes")
    }
}
