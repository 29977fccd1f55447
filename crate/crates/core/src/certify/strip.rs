//! Strip-averaging certificate for oriented configurations.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::certify::CERT_TOL;
use crate::error::{Error, Result};
use crate::geometry::{union, Configuration};

/// Per-direction strip sums for an oriented configuration.
///
/// For each cardinal direction theta, `per_direction` holds
/// S(theta) = sum over boundary segments of |s_j| * l(M_j, theta), where l is
/// the chord length at the segment midpoint within its owning square. Each
/// S(theta) lower-bounds the union area, and the average over the four
/// directions equals a quarter of the perimeter.
#[derive(Debug, Clone)]
pub struct StripCertificate {
    pub per_direction: [f64; 4],
    pub averaged_sum: f64,
    pub area: f64,
    pub perimeter: f64,
}

impl StripCertificate {
    /// The certificate holds when the averaged sum matches p/4 and does not
    /// exceed the area; together these give ratio <= 4.
    pub fn passes(&self) -> bool {
        (self.averaged_sum - self.perimeter / 4.0).abs() <= CERT_TOL
            && self.averaged_sum <= self.area + CERT_TOL
    }
}

pub fn strip_certificate(c: &Configuration) -> Result<StripCertificate> {
    if !c.oriented {
        return Err(Error::NotOriented("strip_certificate".into()));
    }
    let region = union(c)?;
    let polys: Vec<_> = c.squares.iter().map(|s| s.polygon()).collect();
    let directions = [0.0, FRAC_PI_2, PI, 3.0 * FRAC_PI_2];
    let mut per_direction = [0.0f64; 4];
    for seg in &region.boundary_segments {
        let mid = seg.midpoint();
        let len = seg.length();
        let owner = &polys[seg.owner];
        for (k, theta) in directions.iter().enumerate() {
            let dir = (theta.cos(), theta.sin());
            per_direction[k] += len * owner.chord_length(&mid, dir);
        }
    }
    let averaged_sum = per_direction.iter().sum::<f64>() / 4.0;
    Ok(StripCertificate {
        per_direction,
        averaged_sum,
        area: region.area(),
        perimeter: region.perimeter(),
    })
}
