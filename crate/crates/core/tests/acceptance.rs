//! Acceptance suite: the eleven headline checks, one test and one printed
//! pass/fail line each. Run with `--nocapture` to see the lines; a failed
//! criterion fails its test.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use squnion_core::bounds::{general_ratio_bound, t_star_closed, t_star_numeric};
use squnion_core::certify::{bump_step, classify_boundary_strips, strip_certificate};
use squnion_core::explore::{
    centered_family, circle_union_check, clipped_square_pair, corner_triangle_delta,
    isoperimetric_removal_bound, search, SearchSettings,
};
use squnion_core::geometry::{monte_carlo_area, ratio, union, Configuration, Point, UnitSquare};

fn verdict(criterion: &str, pass: bool) {
    println!("criterion {}: {}", criterion, if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {} failed", criterion);
}

#[test]
fn acceptance_01_general_bound() {
    let b = general_ratio_bound();
    let pass = (b - 2.0 * PI / (0.5 * 2.0f64.ln() + FRAC_PI_4)).abs() < 1e-12
        && (b - 5.550663).abs() < 1e-5
        && b <= 5.6;
    verdict("1 (general ratio bound 5.5507 <= 5.6)", pass);
}

#[test]
fn acceptance_02_thickness_integral() {
    let grid: Vec<f64> = (0..10).map(|i| i as f64 / 10.0).chain([0.99]).collect();
    let mut pass = true;
    let mut prev = f64::NEG_INFINITY;
    for &x in &grid {
        let closed = t_star_closed(x).unwrap();
        let numeric = t_star_numeric(x, 1e-9).unwrap();
        pass &= (closed - numeric).abs() <= 1e-6;
        pass &= closed >= prev - 1e-12;
        prev = closed;
    }
    verdict("2 (closed form vs quadrature, monotone)", pass);
}

#[test]
fn acceptance_03_oriented_theorem() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut pass = true;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=20);
        let squares = (0..n)
            .map(|_| {
                UnitSquare::axis_aligned(rng.gen_range(-2.5..2.5), rng.gen_range(-2.5..2.5))
            })
            .collect();
        let c = Configuration::oriented(squares, "acceptance").unwrap();
        pass &= ratio(&c).unwrap() <= 4.0 + 1e-9;
        pass &= strip_certificate(&c).unwrap().passes();
        if !pass {
            eprintln!("failing configuration: {}", c.to_json());
            break;
        }
    }
    verdict("3 (1000 random oriented configurations)", pass);
}

#[test]
fn acceptance_04_incremental_certificates() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let mut pass = true;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let squares: Vec<_> = (0..n)
            .map(|_| {
                UnitSquare::axis_aligned(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
            })
            .collect();
        let base = Configuration::oriented(squares, "acceptance").unwrap();
        let s = UnitSquare::axis_aligned(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let step = bump_step(&base, s).unwrap();
        pass &= step.passes();
        if let Ok(cls) = classify_boundary_strips(&base, s) {
            pass &= cls.passes();
        }
        if !pass {
            eprintln!("failing step: base {} new ({}, {})", base.to_json(), s.center_x, s.center_y);
            break;
        }
    }
    verdict("4 (1000 random incremental steps)", pass);
}

#[test]
fn acceptance_05_centered_squares() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut pass = true;
    for _ in 0..100 {
        let n = rng.gen_range(1..=10);
        let thetas: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..PI)).collect();
        let c = centered_family(&thetas).unwrap();
        pass &= (ratio(&c).unwrap() - 4.0).abs() <= 1e-9;
    }
    verdict("5 (100 random centered families, ratio 4)", pass);
}

#[test]
fn acceptance_06_star_closed_form() {
    let star = centered_family(&[0.0, FRAC_PI_4]).unwrap();
    let r = union(&star).unwrap();
    let mut pass = (r.area() - (4.0 - 2.0 * SQRT_2)).abs() <= 1e-9
        && (r.perimeter() - (16.0 - 8.0 * SQRT_2)).abs() <= 1e-9;
    let (est, se) = monte_carlo_area(&star, 1_000_000, 106).unwrap();
    pass &= (est - r.area()).abs() <= 3.0 * se;
    verdict("6 (star area/perimeter and oracle)", pass);
}

#[test]
fn acceptance_07_corner_triangle() {
    let pass = [0.1, 0.01].iter().all(|&b| {
        (corner_triangle_delta(b).unwrap() - (4.0 - 2.0 * SQRT_2) / b).abs() <= 1e-6
    });
    verdict("7 (corner-triangle delta formula)", pass);
}

#[test]
fn acceptance_08_clipped_square() {
    let (e1, union_ratio) = clipped_square_pair(0.1).unwrap();
    let pass = (e1 - 3.961227).abs() < 1e-6 && e1 < 4.0 && (union_ratio - 4.0).abs() <= 1e-9;
    verdict("8 (clipped-square pair)", pass);
}

#[test]
fn acceptance_09_isoperimetric_bound() {
    let mut pass = true;
    for i in 0..=999 {
        let alpha = FRAC_PI_4 * i as f64 / 999.0;
        pass &= isoperimetric_removal_bound(alpha).unwrap() <= 4.0 + 1e-12;
    }
    pass &= (isoperimetric_removal_bound(0.0).unwrap() - 4.0).abs() <= 1e-12;
    pass &= (isoperimetric_removal_bound(FRAC_PI_4).unwrap() - 4.0).abs() <= 1e-12;
    verdict("9 (isoperimetric removal bound <= 4)", pass);
}

#[test]
fn acceptance_10_circle_corollary() {
    let slack = 2.0 / (PI / 1024.0).cos() + 1e-9;
    let configs: [&[Point]; 3] = [
        &[Point::new(0.0, 0.0)],
        &[Point::new(0.0, 0.0), Point::new(0.4, 0.2)],
        &[
            Point::new(0.0, 0.0),
            Point::new(0.9, 0.0),
            Point::new(0.4, 0.8),
            Point::new(-0.5, 0.6),
            Point::new(0.2, -0.7),
        ],
    ];
    let pass = configs
        .iter()
        .all(|centers| circle_union_check(centers, 1024).unwrap() <= slack);
    verdict("10 (circle unions below 2/cos(pi/1024))", pass);
}

#[test]
fn acceptance_11_search_sanity() {
    let bound = general_ratio_bound();
    let mut pass = true;
    for n in [2usize, 3] {
        let settings = SearchSettings {
            n_squares: n,
            oriented: false,
            box_half_width: 2.0,
            seed: 111,
            max_evals: 100_000,
            restarts: 4,
            filter_enabled: true,
        };
        let report = search(&settings).unwrap();
        let rerun = search(&settings).unwrap();
        pass &= report.best_ratio <= 4.0 + 1e-6;
        pass &= report.max_eval_ratio <= bound + 1e-9;
        pass &= report.best_ratio == rerun.best_ratio && report.evals == rerun.evals;
    }
    verdict("11 (search sanity, determinism)", pass);
}
