//! Independent Monte Carlo area oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::polygon::Configuration;

/// Unbiased rejection-sampling estimate of the union area over the
/// configuration's bounding box. Deterministic for a fixed seed.
///
/// Returns `(estimate, standard_error)`.
pub fn monte_carlo_area(c: &Configuration, samples: u64, seed: u64) -> Result<(f64, f64)> {
    c.validate()?;
    if samples == 0 {
        return Err(Error::Domain {
            op: "monte_carlo_area",
            detail: "samples must be >= 1".into(),
        });
    }
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for s in &c.squares {
        // circumscribed radius of a unit square
        let r = std::f64::consts::SQRT_2 / 2.0;
        min_x = min_x.min(s.center_x - r);
        max_x = max_x.max(s.center_x + r);
        min_y = min_y.min(s.center_y - r);
        max_y = max_y.max(s.center_y + r);
    }
    let box_area = (max_x - min_x) * (max_y - min_y);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits: u64 = 0;
    for _ in 0..samples {
        let x = rng.gen_range(min_x..max_x);
        let y = rng.gen_range(min_y..max_y);
        let p = crate::geometry::Point::new(x, y);
        if c.squares.iter().any(|s| s.contains(&p)) {
            hits += 1;
        }
    }
    let p_hat = hits as f64 / samples as f64;
    let estimate = box_area * p_hat;
    let std_error = box_area * (p_hat * (1.0 - p_hat) / samples as f64).sqrt();
    Ok((estimate, std_error))
}
