//! Boundary-strip classification of the new square's boundary into covered
//! pieces, covered-facing pieces, and net-perimeter pieces, with the
//! inclusion/exclusion area bound.

use crate::certify::CERT_TOL;
use crate::error::{Error, Result};
use crate::geometry::{union, BoundarySegment, Configuration, Point, StripClass, UnitSquare, SNAP_EPS};

/// Classification of the new square's boundary plus the derived strip sums.
#[derive(Debug, Clone)]
pub struct StripClassification {
    pub segments: Vec<BoundarySegment>,
    /// Total length of one member of each mirrored horizontal pair.
    pub h: f64,
    /// Total length of one member of each mirrored vertical pair.
    pub v: f64,
    pub delta_p: f64,
    pub delta_a: f64,
    /// Mirror of every net-perimeter segment is a net-perimeter segment.
    pub mirror_ok: bool,
    /// delta_p <= 2(h+v) and delta_a >= h + v - hv.
    pub bounds_ok: bool,
}

impl StripClassification {
    pub fn passes(&self) -> bool {
        self.mirror_ok && self.bounds_ok
    }
}

/// Bound of the inclusion/exclusion argument: 2(h+v)/(h+v-hv), at most 4 on
/// (0,1]^2 with equality only at h = v = 1.
pub fn strip_bound(h: f64, v: f64) -> Result<f64> {
    if !((0.0..=1.0).contains(&h) && (0.0..=1.0).contains(&v)) {
        return Err(Error::Domain {
            op: "strip_bound",
            detail: format!("(h, v) = ({}, {}) outside [0,1]^2", h, v),
        });
    }
    let denom = h + v - h * v;
    if denom <= 0.0 {
        return Err(Error::Domain {
            op: "strip_bound",
            detail: format!("denominator h + v - hv = {} is not positive", denom),
        });
    }
    Ok(2.0 * (h + v) / denom)
}

#[derive(Debug, Clone, Copy)]
struct Interval(f64, f64);

fn merge(mut xs: Vec<Interval>) -> Vec<Interval> {
    xs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<Interval> = Vec::new();
    for iv in xs {
        match out.last_mut() {
            Some(last) if iv.0 <= last.1 + SNAP_EPS => last.1 = last.1.max(iv.1),
            _ => out.push(iv),
        }
    }
    out
}

fn complement(cover: &[Interval], lo: f64, hi: f64) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut cursor = lo;
    for iv in cover {
        let s = iv.0.max(lo);
        let e = iv.1.min(hi);
        if e <= cursor {
            continue;
        }
        if s > cursor + SNAP_EPS {
            out.push(Interval(cursor, s));
        }
        cursor = cursor.max(e);
    }
    if hi > cursor + SNAP_EPS {
        out.push(Interval(cursor, hi));
    }
    out
}

fn intersect(a: &[Interval], b: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            let s = x.0.max(y.0);
            let e = x.1.min(y.1);
            if e - s > SNAP_EPS {
                out.push(Interval(s, e));
            }
        }
    }
    out
}

fn total(xs: &[Interval]) -> f64 {
    xs.iter().map(|iv| (iv.1 - iv.0).max(0.0)).sum()
}

fn close(a: &[Interval], b: &[Interval]) -> bool {
    // equal as sets of intervals up to the certificate tolerance
    if a.len() != b.len() {
        return false;
    }
    a.iter()
        .zip(b)
        .all(|(x, y)| (x.0 - y.0).abs() <= 1e-6 && (x.1 - y.1).abs() <= 1e-6)
}

/// Partitions the boundary of the incoming axis-aligned square against an
/// oriented figure it overlaps, and checks the strip bounds against the exact
/// kernel deltas.
pub fn classify_boundary_strips(base: &Configuration, s: UnitSquare) -> Result<StripClassification> {
    if !base.oriented {
        return Err(Error::NotOriented("classify_boundary_strips".into()));
    }
    if !s.is_axis_aligned() {
        return Err(Error::Domain {
            op: "classify_boundary_strips",
            detail: format!("new square must be axis-aligned, theta = {}", s.theta),
        });
    }
    let x0 = s.center_x - 0.5;
    let x1 = s.center_x + 0.5;
    let y0 = s.center_y - 0.5;
    let y1 = s.center_y + 0.5;

    // closed intersection boxes of each base square with the new one
    let mut boxes = Vec::new();
    for b in &base.squares {
        let bx0 = (b.center_x - 0.5).max(x0);
        let bx1 = (b.center_x + 0.5).min(x1);
        let by0 = (b.center_y - 0.5).max(y0);
        let by1 = (b.center_y + 0.5).min(y1);
        if bx1 >= bx0 - SNAP_EPS && by1 >= by0 - SNAP_EPS {
            boxes.push((bx0, bx1, by0, by1));
        }
    }
    if !boxes
        .iter()
        .any(|&(bx0, bx1, by0, by1)| bx1 - bx0 > SNAP_EPS && by1 - by0 > SNAP_EPS)
    {
        return Err(Error::Domain {
            op: "classify_boundary_strips",
            detail: "new square has no interior overlap with the figure".into(),
        });
    }

    // Orthogonal shadows of the intersection: a vertical line at x meets the
    // intersection iff x is in shadow_x, and likewise for shadow_y.
    let shadow_x = merge(boxes.iter().map(|&(a, b, _, _)| Interval(a, b)).collect());
    let shadow_y = merge(boxes.iter().map(|&(_, _, a, b)| Interval(a, b)).collect());

    // Covered parts of each side (P0): a base square must reach past the
    // side to the outside of the new square, otherwise the side piece stays
    // on the union boundary (grazing contact from inside is not coverage).
    let covered_on = |horizontal: bool, at: f64, outward: f64| -> Vec<Interval> {
        let mut cov = Vec::new();
        for b in &base.squares {
            let bx0 = b.center_x - 0.5;
            let bx1 = b.center_x + 0.5;
            let by0 = b.center_y - 0.5;
            let by1 = b.center_y + 0.5;
            let (lo_t, hi_t, lo_n, hi_n) = if horizontal {
                (bx0.max(x0), bx1.min(x1), by0, by1)
            } else {
                (by0.max(y0), by1.min(y1), bx0, bx1)
            };
            let reaches_outside = if outward < 0.0 { lo_n < at - SNAP_EPS } else { hi_n > at + SNAP_EPS };
            if lo_n - SNAP_EPS <= at && at <= hi_n + SNAP_EPS && reaches_outside && hi_t - lo_t > SNAP_EPS
            {
                cov.push(Interval(lo_t, hi_t));
            }
        }
        merge(cov)
    };

    let owner = base.squares.len();
    let mut segments = Vec::new();
    let mut p2_sides: Vec<Vec<Interval>> = Vec::new();
    // (horizontal?, fixed coordinate, interval low, interval high, outward)
    let sides = [
        (true, y0, x0, x1, -1.0),
        (true, y1, x0, x1, 1.0),
        (false, x0, y0, y1, -1.0),
        (false, x1, y0, y1, 1.0),
    ];
    for &(horizontal, at, lo, hi, outward) in &sides {
        let p0 = covered_on(horizontal, at, outward);
        let uncovered = complement(&p0, lo, hi);
        let shadow = if horizontal { &shadow_x } else { &shadow_y };
        let p1 = intersect(&uncovered, shadow);
        let shadow_gap = complement(shadow, lo, hi);
        let p2 = intersect(&uncovered, &shadow_gap);
        let mut push = |ivs: &[Interval], class: StripClass| {
            for iv in ivs {
                if iv.1 - iv.0 <= SNAP_EPS {
                    continue;
                }
                let (a, b) = if horizontal {
                    (Point::new(iv.0, at), Point::new(iv.1, at))
                } else {
                    (Point::new(at, iv.0), Point::new(at, iv.1))
                };
                segments.push(BoundarySegment {
                    a,
                    b,
                    owner,
                    strip_class: Some(class),
                });
            }
        };
        push(&intersect(&p0, &[Interval(lo, hi)]), StripClass::P0);
        push(&p1, StripClass::P1);
        push(&p2, StripClass::P2);
        p2_sides.push(p2);
    }

    // mirrored pairs: bottom vs top, left vs right
    let mirror_ok = close(&p2_sides[0], &p2_sides[1]) && close(&p2_sides[2], &p2_sides[3]);
    let h = total(&p2_sides[0]).min(total(&p2_sides[1]));
    let v = total(&p2_sides[2]).min(total(&p2_sides[3]));

    let before = union(base)?;
    let mut extended = base.clone();
    extended.squares.push(s);
    let after = union(&extended)?;
    let delta_p = after.perimeter() - before.perimeter();
    let delta_a = after.area() - before.area();

    let bounds_ok = delta_p <= 2.0 * (h + v) + CERT_TOL && delta_a >= h + v - h * v - CERT_TOL;

    Ok(StripClassification {
        segments,
        h,
        v,
        delta_p,
        delta_a,
        mirror_ok,
        bounds_ok,
    })
}
