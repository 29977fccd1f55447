//! Seeded multi-restart simulated annealing over square configurations,
//! followed by a derivative-free pattern-search polish.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::general_ratio_bound;
use crate::error::{Error, Result};
use crate::explore::overlap_profile;
use crate::geometry::{ratio, Configuration, UnitSquare};

/// Penalty weight for configurations failing the optimality filter.
const FILTER_PENALTY: f64 = 1.0;

#[derive(Debug, Clone)]
pub struct SearchSettings {
    pub n_squares: usize,
    pub oriented: bool,
    /// Half-width of the box centers are confined to.
    pub box_half_width: f64,
    pub seed: u64,
    pub max_evals: u64,
    pub restarts: u64,
    pub filter_enabled: bool,
}

impl SearchSettings {
    fn validate(&self) -> Result<()> {
        if self.n_squares < 2 {
            return Err(Error::Domain {
                op: "search",
                detail: "need at least 2 squares (one square has ratio exactly 4)".into(),
            });
        }
        if self.box_half_width <= 0.0 || self.max_evals == 0 || self.restarts == 0 {
            return Err(Error::Domain {
                op: "search",
                detail: "box half-width, max_evals, and restarts must be positive".into(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub best: Configuration,
    pub best_ratio: f64,
    pub evals: u64,
    pub seed: u64,
    /// Evaluations where the optimality filter rejected the configuration.
    pub filter_prunes: u64,
    /// Largest ratio observed over all evaluations; stays below the general
    /// bound.
    pub max_eval_ratio: f64,
    /// (evaluation index, ratio) at each improvement of the best ratio.
    pub history: Vec<(u64, f64)>,
}

/// Free parameters: squares 1..n as (cx, cy[, theta]); square 0 is pinned at
/// the origin with theta 0 to quotient out rigid motions.
struct Objective {
    oriented: bool,
    filter_enabled: bool,
    box_half_width: f64,
    evals: u64,
    filter_prunes: u64,
    max_eval_ratio: f64,
    best_ratio: f64,
    best_params: Vec<f64>,
    history: Vec<(u64, f64)>,
    bound: f64,
}

impl Objective {
    fn params_per_square(&self) -> usize {
        if self.oriented {
            2
        } else {
            3
        }
    }

    fn config(&self, params: &[f64]) -> Configuration {
        let k = self.params_per_square();
        let mut squares = vec![UnitSquare::axis_aligned(0.0, 0.0)];
        for chunk in params.chunks(k) {
            let theta = if self.oriented { 0.0 } else { chunk[2] };
            squares.push(UnitSquare::new(chunk[0], chunk[1], theta));
        }
        Configuration {
            oriented: self.oriented,
            label: String::new(),
            squares,
        }
    }

    /// Penalized score; higher is better. Returns an error only on kernel
    /// robustness failures.
    fn eval(&mut self, params: &[f64]) -> Result<f64> {
        let c = self.config(params);
        let r = ratio(&c)?;
        self.evals += 1;
        debug_assert!(r <= self.bound + 1e-9, "ratio {} above general bound", r);
        self.max_eval_ratio = self.max_eval_ratio.max(r);
        let mut score = r;
        if self.filter_enabled {
            let profile = overlap_profile(&c)?;
            let shortfall: f64 = profile
                .alphas
                .iter()
                .map(|&a| (FRAC_PI_4 - a).max(0.0))
                .sum();
            if shortfall > 0.0 {
                self.filter_prunes += 1;
                score -= FILTER_PENALTY * shortfall;
            }
        }
        if r > self.best_ratio {
            self.best_ratio = r;
            self.best_params = params.to_vec();
            self.history.push((self.evals, r));
        }
        Ok(score)
    }

    fn clamp(&self, params: &mut [f64]) {
        let k = self.params_per_square();
        for chunk in params.chunks_mut(k) {
            chunk[0] = chunk[0].clamp(-self.box_half_width, self.box_half_width);
            chunk[1] = chunk[1].clamp(-self.box_half_width, self.box_half_width);
            if !self.oriented {
                chunk[2] = chunk[2].rem_euclid(FRAC_PI_2);
            }
        }
    }
}

/// Maximizes the union ratio over configurations of `n_squares` unit squares.
/// Deterministic for a fixed seed; a perturbed square occasionally escapes a
/// degenerate overlap through the annealing temperature.
pub fn search(settings: &SearchSettings) -> Result<SearchReport> {
    settings.validate()?;
    let mut obj = Objective {
        oriented: settings.oriented,
        filter_enabled: settings.filter_enabled,
        box_half_width: settings.box_half_width,
        evals: 0,
        filter_prunes: 0,
        max_eval_ratio: f64::NEG_INFINITY,
        best_ratio: f64::NEG_INFINITY,
        best_params: Vec::new(),
        history: Vec::new(),
        bound: general_ratio_bound(),
    };
    let free = settings.n_squares - 1;
    let dims = free * obj.params_per_square();
    let per_restart = (settings.max_evals / settings.restarts).max(1);

    for restart in 0..settings.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(
            settings.seed.wrapping_add(restart.wrapping_mul(0x9e37_79b9_7f4a_7c15)),
        );
        let mut params = Vec::with_capacity(dims);
        for i in 0..dims {
            if !settings.oriented && i % 3 == 2 {
                params.push(rng.gen_range(0.0..FRAC_PI_2));
            } else {
                params.push(rng.gen_range(-settings.box_half_width..settings.box_half_width));
            }
        }
        obj.clamp(&mut params);
        anneal(&mut obj, &mut rng, &mut params, per_restart * 4 / 5)?;
        if obj.evals < (restart + 1) * per_restart {
            let budget = (restart + 1) * per_restart - obj.evals;
            let mut polish_params = obj.best_params.clone();
            if !polish_params.is_empty() {
                pattern_search(&mut obj, &mut polish_params, budget)?;
            }
        }
    }

    let best = obj.config(&obj.best_params);
    Ok(SearchReport {
        best_ratio: obj.best_ratio,
        best,
        evals: obj.evals,
        seed: settings.seed,
        filter_prunes: obj.filter_prunes,
        max_eval_ratio: obj.max_eval_ratio,
        history: obj.history,
    })
}

fn anneal(
    obj: &mut Objective,
    rng: &mut ChaCha8Rng,
    params: &mut Vec<f64>,
    steps: u64,
) -> Result<()> {
    let t_start = 0.5f64;
    let t_end = 1e-4f64;
    let decay = (t_end / t_start).powf(1.0 / steps.max(2) as f64);
    let mut temperature = t_start;
    let mut current = obj.eval(params)?;
    for _ in 0..steps.saturating_sub(1) {
        let mut proposal = params.clone();
        let k = obj.params_per_square();
        let square = rng.gen_range(0..proposal.len() / k);
        let sigma = 0.8 * temperature + 0.01;
        for d in 0..k {
            let scale = if d == 2 { sigma * FRAC_PI_2 } else { sigma };
            proposal[square * k + d] += gaussian(rng) * scale;
        }
        obj.clamp(&mut proposal);
        let score = obj.eval(&proposal)?;
        let accept = score >= current || rng.gen::<f64>() < ((score - current) / temperature).exp();
        if accept {
            *params = proposal;
            current = score;
        }
        temperature *= decay;
    }
    Ok(())
}

/// Coordinate pattern search with shrinking step, used as a local polish of
/// the incumbent.
fn pattern_search(obj: &mut Objective, params: &mut [f64], budget: u64) -> Result<()> {
    let start_evals = obj.evals;
    let mut step = 0.05;
    let mut current = obj.eval(params)?;
    while step > 1e-5 && obj.evals - start_evals < budget {
        let mut improved = false;
        'dims: for d in 0..params.len() {
            for sign in [1.0, -1.0] {
                if obj.evals - start_evals >= budget {
                    break 'dims;
                }
                let saved = params[d];
                params[d] = saved + sign * step;
                obj.clamp(params);
                let score = obj.eval(params)?;
                if score > current {
                    current = score;
                    improved = true;
                    break;
                }
                params[d] = saved;
            }
        }
        if !improved {
            step /= 2.0;
        }
    }
    Ok(())
}

/// Box-Muller standard normal draw.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}
