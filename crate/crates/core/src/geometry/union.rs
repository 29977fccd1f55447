//! Boolean union of convex polygons with boundary attribution.
//!
//! Rather than a general plane sweep, the kernel works per input edge: for
//! every edge of every input polygon it computes the sub-intervals that
//! survive on the union boundary, by subtracting the cover intervals
//! contributed by every other polygon. Collinear overlaps — the dominant
//! degeneracy for axis-oriented squares — are handled explicitly: an edge
//! piece shared with an opposite-facing edge is interior to the union, and a
//! piece shared with a same-facing edge is kept only by the lowest input
//! index. The surviving directed segments (interior on the left) are chained
//! into closed rings; shells come out counter-clockwise and holes clockwise.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geometry::polygon::{
    cross, ring_length, ring_signed_area, Configuration, ConvexPolygon, Point, SNAP_EPS,
};

/// Boundary-strip class assigned by the incremental certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripClass {
    /// Covered by the existing figure.
    P0,
    /// Uncovered, orthogonally facing the intersection.
    P1,
    /// Uncovered, orthogonally missing the intersection.
    P2,
}

/// A maximal straight piece of the union boundary, directed with the region
/// interior on its left and attributed to the input polygon whose edge
/// carries it.
#[derive(Debug, Clone)]
pub struct BoundarySegment {
    pub a: Point,
    pub b: Point,
    pub owner: usize,
    pub strip_class: Option<StripClass>,
}

impl BoundarySegment {
    pub fn length(&self) -> f64 {
        self.a.dist(&self.b)
    }

    pub fn midpoint(&self) -> Point {
        Point::new((self.a.x + self.b.x) / 2.0, (self.a.y + self.b.y) / 2.0)
    }
}

/// A hole ring (clockwise) together with the shell it lies in.
#[derive(Debug, Clone)]
pub struct Hole {
    pub ring: Vec<Point>,
    pub shell: usize,
}

/// Union result: simple shells with optional holes plus the attributed
/// boundary segments they were assembled from.
#[derive(Debug, Clone)]
pub struct Region {
    pub shells: Vec<Vec<Point>>,
    pub holes: Vec<Hole>,
    pub boundary_segments: Vec<BoundarySegment>,
}

impl Region {
    pub fn area(&self) -> f64 {
        let shell_sum: f64 = self.shells.iter().map(|r| ring_signed_area(r)).sum();
        let hole_sum: f64 = self.holes.iter().map(|h| ring_signed_area(&h.ring)).sum();
        shell_sum + hole_sum
    }

    pub fn perimeter(&self) -> f64 {
        let shell_sum: f64 = self.shells.iter().map(|r| ring_length(r)).sum();
        let hole_sum: f64 = self.holes.iter().map(|h| ring_length(&h.ring)).sum();
        shell_sum + hole_sum
    }

    pub fn ratio(&self) -> f64 {
        self.perimeter() / self.area()
    }

    pub fn rings(&self) -> impl Iterator<Item = &[Point]> {
        self.shells
            .iter()
            .map(|r| r.as_slice())
            .chain(self.holes.iter().map(|h| h.ring.as_slice()))
    }
}

/// Union of the squares of a configuration.
pub fn union(c: &Configuration) -> Result<Region> {
    c.validate()?;
    let polys: Vec<ConvexPolygon> = c.squares.iter().map(|s| s.polygon()).collect();
    union_convex(&polys)
}

/// Union of arbitrary convex polygons. Owner indices in the result refer to
/// positions in `polys`.
pub fn union_convex(polys: &[ConvexPolygon]) -> Result<Region> {
    if polys.is_empty() {
        return Err(Error::InvalidConfiguration("empty polygon list".into()));
    }
    let mut segments = Vec::new();
    for (i, poly) in polys.iter().enumerate() {
        for e in 0..poly.len() {
            let (a, b) = poly.edge(e);
            exposed_subsegments(i, a, b, polys, &mut segments);
        }
    }
    let (shells, holes) = assemble_rings(&segments)?;
    Ok(Region {
        shells,
        holes,
        boundary_segments: segments,
    })
}

/// Appends the pieces of edge `a -> b` of polygon `i` that lie on the union
/// boundary (with owner tie-break by lowest index on shared edges).
fn exposed_subsegments(
    i: usize,
    a: Point,
    b: Point,
    polys: &[ConvexPolygon],
    out: &mut Vec<BoundarySegment>,
) {
    let len = a.dist(&b);
    if len < SNAP_EPS {
        return;
    }
    let u = ((b.x - a.x) / len, (b.y - a.y) / len);
    let normal = (-u.1, u.0); // interior side of the CCW edge

    let mut blocked: Vec<(f64, f64)> = Vec::new();
    for (j, other) in polys.iter().enumerate() {
        if j == i {
            continue;
        }
        let Some((t0, t1)) = clip_to_polygon(&a, u, len, other) else {
            continue;
        };
        if t1 - t0 <= SNAP_EPS {
            continue; // grazing contact
        }
        match collinear_edge_normal(&a, u, other) {
            Some(other_normal) => {
                let aligned = normal.0 * other_normal.0 + normal.1 * other_normal.1 > 0.0;
                if aligned {
                    // Shared boundary facing the same way: count once,
                    // attributed to the lowest index.
                    if j < i {
                        blocked.push((t0, t1));
                    }
                } else {
                    // Polygons on both sides: interior to the union.
                    blocked.push((t0, t1));
                }
            }
            None => blocked.push((t0, t1)),
        }
    }

    for (s, e) in complement(&mut blocked, len) {
        if e - s > SNAP_EPS {
            out.push(BoundarySegment {
                a: Point::new(a.x + s * u.0, a.y + s * u.1),
                b: Point::new(a.x + e * u.0, a.y + e * u.1),
                owner: i,
                strip_class: None,
            });
        }
    }
}

/// Parameter interval of `p + t*u`, `t in [0, len]`, inside the closed
/// polygon, or None if the segment misses it.
fn clip_to_polygon(p: &Point, u: (f64, f64), len: f64, poly: &ConvexPolygon) -> Option<(f64, f64)> {
    let mut t0 = 0.0f64;
    let mut t1 = len;
    for e in 0..poly.len() {
        let (c, d) = poly.edge(e);
        let elen = c.dist(&d);
        if elen < SNAP_EPS {
            continue;
        }
        let nx = -(d.y - c.y) / elen;
        let ny = (d.x - c.x) / elen;
        let num = nx * (p.x - c.x) + ny * (p.y - c.y);
        let den = nx * u.0 + ny * u.1;
        if den.abs() < 1e-15 {
            if num < -SNAP_EPS {
                return None;
            }
            continue;
        }
        let t = -num / den;
        if den > 0.0 {
            t0 = t0.max(t);
        } else {
            t1 = t1.min(t);
        }
        if t0 > t1 {
            return None;
        }
    }
    Some((t0, t1))
}

/// If the line through `p` with direction `u` carries an edge of `poly`,
/// returns that edge's interior normal.
fn collinear_edge_normal(p: &Point, u: (f64, f64), poly: &ConvexPolygon) -> Option<(f64, f64)> {
    for e in 0..poly.len() {
        let (c, d) = poly.edge(e);
        let elen = c.dist(&d);
        if elen < SNAP_EPS {
            continue;
        }
        let ex = (d.x - c.x) / elen;
        let ey = (d.y - c.y) / elen;
        if cross(u.0, u.1, ex, ey).abs() < SNAP_EPS
            && cross(u.0, u.1, c.x - p.x, c.y - p.y).abs() < SNAP_EPS
        {
            return Some((-ey, ex));
        }
    }
    None
}

/// Complement of the (merged) blocked intervals within [0, len].
fn complement(blocked: &mut Vec<(f64, f64)>, len: f64) -> Vec<(f64, f64)> {
    blocked.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut exposed = Vec::new();
    let mut cursor = 0.0;
    for &(s, e) in blocked.iter() {
        let s = s.max(0.0);
        let e = e.min(len);
        if e <= cursor {
            continue;
        }
        if s > cursor {
            exposed.push((cursor, s));
        }
        cursor = e;
    }
    if cursor < len {
        exposed.push((cursor, len));
    }
    exposed
}

const MERGE_CELL: f64 = SNAP_EPS;

fn snap_key(p: &Point) -> (i64, i64) {
    ((p.x / MERGE_CELL).floor() as i64, (p.y / MERGE_CELL).floor() as i64)
}

struct VertexIndex {
    cells: HashMap<(i64, i64), Vec<usize>>,
    points: Vec<Point>,
}

impl VertexIndex {
    fn new() -> Self {
        VertexIndex {
            cells: HashMap::new(),
            points: Vec::new(),
        }
    }

    fn id_of(&mut self, p: &Point) -> usize {
        let (kx, ky) = snap_key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(kx + dx, ky + dy)) {
                    for &id in ids {
                        if self.points[id].dist(p) <= SNAP_EPS {
                            return id;
                        }
                    }
                }
            }
        }
        let id = self.points.len();
        self.points.push(*p);
        self.cells.entry((kx, ky)).or_default().push(id);
        id
    }
}

/// Chains directed segments into closed rings. At a pinch vertex with several
/// outgoing segments, the traversal takes the sharpest left turn, which keeps
/// point-contact components as distinct rings.
fn assemble_rings(segments: &[BoundarySegment]) -> Result<(Vec<Vec<Point>>, Vec<Hole>)> {
    let mut index = VertexIndex::new();
    let mut out_edges: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut ends = Vec::with_capacity(segments.len());
    for (k, seg) in segments.iter().enumerate() {
        let va = index.id_of(&seg.a);
        let vb = index.id_of(&seg.b);
        ends.push((va, vb));
        out_edges.entry(va).or_default().push(k);
    }

    let mut used = vec![false; segments.len()];
    let mut rings: Vec<Vec<Point>> = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        let mut ring = Vec::new();
        let start_vertex = ends[start].0;
        let mut current = start;
        loop {
            used[current] = true;
            ring.push(segments[current].a);
            let head = ends[current].1;
            if head == start_vertex {
                break;
            }
            let dir_in = (
                segments[current].b.x - segments[current].a.x,
                segments[current].b.y - segments[current].a.y,
            );
            let candidates = out_edges.get(&head).map(|v| v.as_slice()).unwrap_or(&[]);
            let mut best: Option<(f64, usize)> = None;
            for &k in candidates {
                if used[k] {
                    continue;
                }
                let dir_out = (
                    segments[k].b.x - segments[k].a.x,
                    segments[k].b.y - segments[k].a.y,
                );
                // clockwise angle from the reversed incoming direction;
                // smallest value = sharpest left turn
                let rev = (-dir_in.0, -dir_in.1);
                let ang = cross(dir_out.0, dir_out.1, rev.0, rev.1)
                    .atan2(dir_out.0 * rev.0 + dir_out.1 * rev.1)
                    .rem_euclid(2.0 * std::f64::consts::PI);
                let ang = if ang < 1e-12 { 2.0 * std::f64::consts::PI } else { ang };
                if best.map_or(true, |(b, _)| ang < b) {
                    best = Some((ang, k));
                }
            }
            match best {
                Some((_, k)) => current = k,
                None => {
                    let p = segments[current].b;
                    return Err(Error::Robustness {
                        x: p.x,
                        y: p.y,
                        detail: "open boundary chain: no outgoing segment".into(),
                    });
                }
            }
        }
        rings.push(ring);
    }

    let mut shells: Vec<Vec<Point>> = Vec::new();
    let mut hole_rings: Vec<Vec<Point>> = Vec::new();
    for ring in rings {
        if ring_signed_area(&ring) >= 0.0 {
            shells.push(ring);
        } else {
            hole_rings.push(ring);
        }
    }

    let mut holes = Vec::new();
    for ring in hole_rings {
        let probe = ring[0];
        let mut best: Option<(f64, usize)> = None;
        for (s, shell) in shells.iter().enumerate() {
            if point_in_ring(&probe, shell) {
                let area = ring_signed_area(shell);
                if best.map_or(true, |(a, _)| area < a) {
                    best = Some((area, s));
                }
            }
        }
        match best {
            Some((_, s)) => holes.push(Hole { ring, shell: s }),
            None => {
                return Err(Error::Robustness {
                    x: probe.x,
                    y: probe.y,
                    detail: "hole ring not contained in any shell".into(),
                })
            }
        }
    }
    Ok((shells, holes))
}

/// Ray-casting point-in-polygon for a general simple ring. Boundary points
/// may land on either side; callers only use it with strictly interior holes.
fn point_in_ring(p: &Point, ring: &[Point]) -> bool {
    let mut inside = false;
    let n = ring.len();
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if x_cross > p.x {
                inside = !inside;
            }
        }
    }
    inside
}
