//! Kernel tests: squares, unions, measures, and the Monte Carlo oracle.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use approx::assert_relative_eq;
use squnion_core::geometry::{
    area, monte_carlo_area, perimeter, ratio, square_polygon, union, Configuration, Point,
    UnitSquare,
};

fn config(squares: Vec<UnitSquare>, oriented: bool) -> Configuration {
    Configuration::new(squares, oriented, "test").unwrap()
}

#[test]
fn square_polygon_axis_aligned() {
    let p = square_polygon(&UnitSquare::axis_aligned(0.0, 0.0));
    let vs = p.vertices();
    assert_eq!(vs.len(), 4);
    for v in vs {
        assert_relative_eq!(v.x.abs(), 0.5, epsilon = 1e-12);
        assert_relative_eq!(v.y.abs(), 0.5, epsilon = 1e-12);
    }
    assert_relative_eq!(p.signed_area(), 1.0, epsilon = 1e-12);
    assert_relative_eq!(p.perimeter(), 4.0, epsilon = 1e-12);
}

#[test]
fn square_polygon_diagonal() {
    // theta = pi/4: vertices on the axes at distance sqrt(2)/2
    let p = square_polygon(&UnitSquare::new(0.0, 0.0, FRAC_PI_4));
    for v in p.vertices() {
        let on_x_axis = v.y.abs() < 1e-12 && (v.x.abs() - SQRT_2 / 2.0).abs() < 1e-12;
        let on_y_axis = v.x.abs() < 1e-12 && (v.y.abs() - SQRT_2 / 2.0).abs() < 1e-12;
        assert!(on_x_axis || on_y_axis, "unexpected vertex {:?}", v);
    }
}

#[test]
fn square_polygon_generic_rotation() {
    let s = UnitSquare::new(3.0, 1.0, 0.3);
    let p = square_polygon(&s);
    for v in p.vertices() {
        let d = ((v.x - 3.0).powi(2) + (v.y - 1.0).powi(2)).sqrt();
        assert_relative_eq!(d, SQRT_2 / 2.0, epsilon = 1e-12);
    }
    // side lengths are 1
    for i in 0..4 {
        let (a, b) = p.edge(i);
        assert_relative_eq!(a.dist(&b), 1.0, epsilon = 1e-12);
    }
}

#[test]
fn theta_normalized_to_quarter_turn() {
    let s = UnitSquare::new(0.0, 0.0, 3.0 * std::f64::consts::FRAC_PI_2 + 0.1);
    assert!((0.0..std::f64::consts::FRAC_PI_2).contains(&s.theta));
    assert_relative_eq!(s.theta, 0.1, epsilon = 1e-9);
}

#[test]
fn union_single_square() {
    let r = union(&config(vec![UnitSquare::axis_aligned(0.0, 0.0)], true)).unwrap();
    assert_eq!(r.shells.len(), 1);
    assert!(r.holes.is_empty());
    assert_relative_eq!(area(&r), 1.0, epsilon = 1e-12);
    assert_relative_eq!(perimeter(&r), 4.0, epsilon = 1e-12);
}

#[test]
fn union_duplicate_squares_idempotent() {
    let r = union(&config(
        vec![UnitSquare::axis_aligned(0.0, 0.0), UnitSquare::axis_aligned(0.0, 0.0)],
        true,
    ))
    .unwrap();
    assert_relative_eq!(area(&r), 1.0, epsilon = 1e-9);
    assert_relative_eq!(perimeter(&r), 4.0, epsilon = 1e-9);
}

#[test]
fn union_star_of_two_concentric_squares() {
    let r = union(&config(
        vec![
            UnitSquare::axis_aligned(0.0, 0.0),
            UnitSquare::new(0.0, 0.0, FRAC_PI_4),
        ],
        false,
    ))
    .unwrap();
    assert_eq!(r.shells.len(), 1);
    assert!(r.holes.is_empty());
    assert_eq!(r.boundary_segments.len(), 16);
    assert_relative_eq!(area(&r), 4.0 - 2.0 * SQRT_2, epsilon = 1e-9);
    assert_relative_eq!(perimeter(&r), 16.0 - 8.0 * SQRT_2, epsilon = 1e-9);
}

#[test]
fn union_domino() {
    let r = union(&config(
        vec![UnitSquare::axis_aligned(0.0, 0.0), UnitSquare::axis_aligned(1.0, 0.0)],
        true,
    ))
    .unwrap();
    assert_eq!(r.shells.len(), 1);
    assert_relative_eq!(area(&r), 2.0, epsilon = 1e-9);
    assert_relative_eq!(perimeter(&r), 6.0, epsilon = 1e-9);
}

#[test]
fn union_disjoint_pair() {
    let r = union(&config(
        vec![UnitSquare::axis_aligned(0.0, 0.0), UnitSquare::axis_aligned(3.0, 0.0)],
        true,
    ))
    .unwrap();
    assert_eq!(r.shells.len(), 2);
    assert_relative_eq!(area(&r), 2.0, epsilon = 1e-9);
    assert_relative_eq!(perimeter(&r), 8.0, epsilon = 1e-9);
}

#[test]
fn union_point_contact_counts_both_boundaries() {
    // corner-to-corner contact: two rings, perimeter 8
    let r = union(&config(
        vec![UnitSquare::axis_aligned(0.0, 0.0), UnitSquare::axis_aligned(1.0, 1.0)],
        true,
    ))
    .unwrap();
    assert_eq!(r.shells.len(), 2);
    assert_relative_eq!(area(&r), 2.0, epsilon = 1e-9);
    assert_relative_eq!(perimeter(&r), 8.0, epsilon = 1e-9);
}

#[test]
fn union_ring_with_hole() {
    // 8 squares around an empty center cell of a 3x3 grid
    let mut squares = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == 1 && j == 1 {
                continue;
            }
            squares.push(UnitSquare::axis_aligned(i as f64, j as f64));
        }
    }
    let r = union(&config(squares, true)).unwrap();
    assert_eq!(r.shells.len(), 1);
    assert_eq!(r.holes.len(), 1);
    assert_relative_eq!(area(&r), 8.0, epsilon = 1e-9);
    // outer 12 + inner 4
    assert_relative_eq!(perimeter(&r), 16.0, epsilon = 1e-9);
}

#[test]
fn union_permutation_invariant() {
    let a_cfg = config(
        vec![
            UnitSquare::axis_aligned(0.0, 0.0),
            UnitSquare::axis_aligned(0.6, 0.3),
            UnitSquare::new(0.2, 0.8, 0.7),
        ],
        false,
    );
    let mut squares = a_cfg.squares.clone();
    squares.reverse();
    let b_cfg = config(squares, false);
    let ra = union(&a_cfg).unwrap();
    let rb = union(&b_cfg).unwrap();
    assert_relative_eq!(ra.area(), rb.area(), epsilon = 1e-9);
    assert_relative_eq!(ra.perimeter(), rb.perimeter(), epsilon = 1e-9);
}

#[test]
fn attribution_sums_to_perimeter() {
    let c = config(
        vec![
            UnitSquare::axis_aligned(0.0, 0.0),
            UnitSquare::axis_aligned(0.5, 0.5),
            UnitSquare::new(1.0, 0.0, 0.4),
        ],
        false,
    );
    let r = union(&c).unwrap();
    let seg_sum: f64 = r.boundary_segments.iter().map(|s| s.length()).sum();
    assert_relative_eq!(seg_sum, r.perimeter(), epsilon = 1e-9);
    // every segment lies on an edge line of its owner
    for seg in &r.boundary_segments {
        let poly = c.squares[seg.owner].polygon();
        let mid = seg.midpoint();
        let mut on_edge = false;
        for e in 0..poly.len() {
            let (a, b) = poly.edge(e);
            let len = a.dist(&b);
            let d = ((b.x - a.x) * (mid.y - a.y) - (b.y - a.y) * (mid.x - a.x)).abs() / len;
            if d < 1e-9 {
                on_edge = true;
            }
        }
        assert!(on_edge, "segment midpoint off its owner's edge lines");
    }
}

#[test]
fn ratio_examples() {
    let single = config(vec![UnitSquare::axis_aligned(2.0, -1.0)], true);
    assert_relative_eq!(ratio(&single).unwrap(), 4.0, epsilon = 1e-9);

    let mut grid = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            grid.push(UnitSquare::axis_aligned(2.0 * i as f64, 2.0 * j as f64));
        }
    }
    assert_relative_eq!(ratio(&config(grid, true)).unwrap(), 4.0, epsilon = 1e-9);

    let centered = config(
        vec![
            UnitSquare::new(0.0, 0.0, 0.0),
            UnitSquare::new(0.0, 0.0, 0.5),
            UnitSquare::new(0.0, 0.0, 1.1),
        ],
        false,
    );
    assert_relative_eq!(ratio(&centered).unwrap(), 4.0, epsilon = 1e-9);
}

#[test]
fn monte_carlo_matches_exact_area() {
    let star = config(
        vec![
            UnitSquare::axis_aligned(0.0, 0.0),
            UnitSquare::new(0.0, 0.0, FRAC_PI_4),
        ],
        false,
    );
    let (est, se) = monte_carlo_area(&star, 1_000_000, 7).unwrap();
    let exact = 4.0 - 2.0 * SQRT_2;
    assert!((est - exact).abs() <= 3.0 * se, "est {} exact {} se {}", est, exact, se);

    let single = config(vec![UnitSquare::axis_aligned(0.0, 0.0)], true);
    let (est, se) = monte_carlo_area(&single, 1_000_000, 1).unwrap();
    assert!((est - 1.0).abs() <= 3.0 * se);

    let pair = config(
        vec![UnitSquare::axis_aligned(0.0, 0.0), UnitSquare::axis_aligned(4.0, 0.0)],
        true,
    );
    let (est, se) = monte_carlo_area(&pair, 1_000_000, 2).unwrap();
    assert!((est - 2.0).abs() <= 3.0 * se);
}

#[test]
fn monte_carlo_deterministic() {
    let c = config(vec![UnitSquare::new(0.0, 0.0, 0.3)], false);
    let a = monte_carlo_area(&c, 10_000, 42).unwrap();
    let b = monte_carlo_area(&c, 10_000, 42).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rigid_motion_invariance() {
    let base = config(
        vec![
            UnitSquare::axis_aligned(0.0, 0.0),
            UnitSquare::new(0.7, 0.2, 0.5),
        ],
        false,
    );
    let phi = 0.9f64;
    let (s, c) = phi.sin_cos();
    let moved_squares = base
        .squares
        .iter()
        .map(|sq| {
            UnitSquare::new(
                c * sq.center_x - s * sq.center_y + 3.0,
                s * sq.center_x + c * sq.center_y - 2.0,
                sq.theta + phi,
            )
        })
        .collect();
    let moved = config(moved_squares, false);
    let ra = union(&base).unwrap();
    let rb = union(&moved).unwrap();
    assert_relative_eq!(ra.area(), rb.area(), epsilon = 1e-9);
    assert_relative_eq!(ra.perimeter(), rb.perimeter(), epsilon = 1e-9);
}

#[test]
fn configuration_json_roundtrip() {
    let text = r#"{"oriented": false, "label": "pair", "squares": [
        {"cx": 0.0, "cy": 0.0, "theta": 0.0},
        {"cx": 0.5, "cy": 0.25, "theta": 0.9}
    ]}"#;
    let c = Configuration::from_json(text).unwrap();
    assert_eq!(c.len(), 2);
    let back = Configuration::from_json(&c.to_json()).unwrap();
    assert_eq!(back.squares[1].theta, c.squares[1].theta);

    assert!(Configuration::from_json("{").is_err());
    assert!(Configuration::from_json(r#"{"oriented": true, "squares": [{"cx": 0, "cy": 0, "theta": 0.5}]}"#).is_err());
}

#[test]
fn chord_length_matches_square_geometry() {
    let p = square_polygon(&UnitSquare::axis_aligned(0.5, 0.5));
    // vertical chord through the middle of the bottom edge
    assert_relative_eq!(
        p.chord_length(&Point::new(0.5, 0.0), (0.0, 1.0)),
        1.0,
        epsilon = 1e-12
    );
    // diagonal from the corner
    let d = (SQRT_2 / 2.0, SQRT_2 / 2.0);
    assert_relative_eq!(p.chord_length(&Point::new(0.0, 0.0), d), SQRT_2, epsilon = 1e-12);
    // ray along the boundary has no interior part
    assert_relative_eq!(
        p.chord_length(&Point::new(0.5, 0.0), (1.0, 0.0)),
        0.0,
        epsilon = 1e-12
    );
    // outward ray
    assert_relative_eq!(
        p.chord_length(&Point::new(0.5, 0.0), (0.0, -1.0)),
        0.0,
        epsilon = 1e-12
    );
}
