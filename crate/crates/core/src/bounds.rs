//! Thickness machinery for the general (non-oriented) bound.
//!
//! For a boundary point p = (x, 0) of the normalized unit square [0,1]^2,
//! `l_star` is the chord length from p into the square in direction theta,
//! `tau_star` the thickness l_star * sin(theta), and `T_star` its full-angle
//! integral. The infimum of T_star over x gives the ratio bound 2*pi/T_star(0).

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// cot^-1 with range (0, pi), so cot_inv(0) = pi/2.
fn cot_inv(t: f64) -> f64 {
    (1.0f64).atan2(t)
}

fn check_x(op: &'static str, x: f64, closed_right: bool) -> Result<()> {
    let ok = if closed_right {
        (0.0..=1.0).contains(&x)
    } else {
        (0.0..1.0).contains(&x)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Domain {
            op,
            detail: format!("x = {} outside domain", x),
        })
    }
}

/// The two branch angles of the piecewise chord formula.
pub fn breakpoints(x: f64) -> (f64, f64) {
    (cot_inv(1.0 - x), PI - cot_inv(x))
}

/// Chord length from (x, 0) into the unit square in direction theta.
/// Zero on [pi, 2*pi), where the ray leaves the square immediately.
pub fn l_star(x: f64, theta: f64) -> Result<f64> {
    check_x("l_star", x, true)?;
    let theta = theta.rem_euclid(2.0 * PI);
    let (b1, b2) = breakpoints(x);
    let v = if theta < b1 {
        (1.0 - x) / theta.cos()
    } else if theta <= b2 {
        1.0 / theta.sin()
    } else if theta < PI {
        -x / theta.cos()
    } else {
        0.0
    };
    Ok(v)
}

/// Thickness l_star(x, theta) * sin(theta); equals the piecewise form
/// (1-x)tan(theta) / 1 / -x tan(theta) / 0 and is bounded in [0, 1].
pub fn tau_star(x: f64, theta: f64) -> Result<f64> {
    check_x("tau_star", x, true)?;
    let theta = theta.rem_euclid(2.0 * PI);
    if theta >= PI {
        return Ok(0.0);
    }
    let (b1, b2) = breakpoints(x);
    let v = if theta < b1 {
        (1.0 - x) * theta.tan()
    } else if theta <= b2 {
        1.0
    } else {
        -x * theta.tan()
    };
    Ok(v)
}

/// Closed form of the full-angle thickness integral,
/// ln(1+(1-x)^2)/2 - ln(1-x) + pi - cot^-1(1-x) - cot^-1(x).
///
/// The -ln(1-x) term diverges as x -> 1, so the domain is [0, 1).
pub fn t_star_closed(x: f64) -> Result<f64> {
    check_x("t_star_closed", x, false)?;
    let one_minus = 1.0 - x;
    Ok((1.0 + one_minus * one_minus).ln() / 2.0 - one_minus.ln() + PI
        - cot_inv(one_minus)
        - cot_inv(x))
}

/// Branch profile whose exact integral is `t_star_closed`: tan(theta) on the
/// first branch, 1 on the middle, 0 past the second breakpoint. This is
/// `tau_star` with the (1-x) and -x chord weights of the outer branches
/// replaced by 1 and 0 — the closed form above antidifferentiates exactly
/// this profile, which is what makes it asymmetric in x and increasing all
/// the way to x = 1 (the weighted integrand integrates to a profile
/// symmetric under x <-> 1-x instead; see the bound notes in the README).
fn tau_star_printed(x: f64, theta: f64) -> f64 {
    let (b1, b2) = breakpoints(x);
    if theta < b1 {
        theta.tan()
    } else if theta <= b2 {
        1.0
    } else {
        0.0
    }
}

/// Adaptive Simpson quadrature companion of `t_star_closed`, integrating the
/// same branch profile over [0, pi] (the integrand is zero on [pi, 2*pi)),
/// split at the two branch angles so each panel is smooth.
/// Absolute error <= tol.
pub fn t_star_numeric(x: f64, tol: f64) -> Result<f64> {
    check_x("t_star_numeric", x, false)?;
    if tol <= 0.0 {
        return Err(Error::Domain {
            op: "t_star_numeric",
            detail: format!("tol = {} must be positive", tol),
        });
    }
    let (b1, b2) = breakpoints(x);
    let f = |theta: f64| tau_star_printed(x, theta);
    let mut total = 0.0;
    let panels = [(0.0, b1), (b1, b2), (b2, PI)];
    for &(a, b) in &panels {
        if b - a < 1e-15 {
            continue;
        }
        total += adaptive_simpson(&f, a, b, tol / 3.0)?;
    }
    Ok(total)
}

fn simpson(a: f64, fa: f64, b: f64, fb: f64, fm: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    const MAX_DEPTH: u32 = 50;
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = (a + b) / 2.0;
        let lm = (a + m) / 2.0;
        let rm = (m + b) / 2.0;
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(a, fa, m, fm, flm);
        let right = simpson(m, fm, b, fb, frm);
        let err = left + right - whole;
        // machine-precision floor: refining further only adds rounding noise
        if err.abs() <= 15.0 * tol || err.abs() < 1e-13 {
            return Ok(left + right + err / 15.0);
        }
        if depth == 0 {
            return Err(Error::QuadratureNonConvergence {
                requested: tol,
                achieved: err.abs() / 15.0,
            });
        }
        let l = recurse(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1)?;
        let r = recurse(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1)?;
        Ok(l + r)
    }
    let fa = f(a);
    let fb = f(b);
    let m = (a + b) / 2.0;
    let fm = f(m);
    let whole = simpson(a, fa, b, fb, fm);
    recurse(f, a, fa, b, fb, fm, whole, tol, MAX_DEPTH)
}

/// Closed form and quadrature of T_star at one boundary position.
#[derive(Debug, Clone, Copy)]
pub struct ThicknessProfile {
    pub x: f64,
    pub breakpoints: (f64, f64),
    pub closed_form_t: f64,
    pub numeric_t: f64,
}

impl ThicknessProfile {
    pub fn compute(x: f64) -> Result<Self> {
        let closed = t_star_closed(x)?;
        let numeric = t_star_numeric(x, 1e-9)?;
        Ok(ThicknessProfile {
            x,
            breakpoints: breakpoints(x),
            closed_form_t: closed,
            numeric_t: numeric,
        })
    }
}

/// The general ratio bound 2*pi / T_star(0) = 2*pi / (ln(2)/2 + pi/4),
/// about 5.550663 and below 5.6.
pub fn general_ratio_bound() -> f64 {
    let t0 = t_star_closed(0.0).expect("0 is in domain");
    let bound = 2.0 * PI / t0;
    assert!(bound <= 5.6, "bound exceeded its stated ceiling: {}", bound);
    bound
}
