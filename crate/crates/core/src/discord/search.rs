use std::cell::RefCell;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{DiscordResult, MeasurementDirection, Method, Objective, OptimalFamily};
use crate::error::{Error, Result};
use crate::optimize::{nelder_mead, NelderMeadOptions};
use crate::states::TwoQubitState;

pub const MIN_GRID_THETA: usize = 32;
pub const MIN_GRID_PSI: usize = 64;
/// Directions within this of the best value count as optimal.
pub const OPTIMUM_TOL: f64 = 1e-7;
/// Simplex stopping tolerance of the refinement stage.
pub const REFINE_TOL: f64 = 1e-10;
/// Refined directions closer than this (in axis angle) are merged.
const CLUSTER_ANGLE: f64 = 1e-4;
const PROBES: usize = 24;
const RESTARTS: usize = 2;

/// Sphere-search settings: a `(θ, ψ)` grid scan followed by simplex
/// refinement from the best distinct grid points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridConfig {
    pub n_theta: usize,
    pub n_psi: usize,
    pub refine_iters: usize,
    pub n_starts: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self { n_theta: 64, n_psi: 128, refine_iters: 200, n_starts: 5 }
    }
}

impl GridConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_theta < MIN_GRID_THETA || self.n_psi < MIN_GRID_PSI {
            return Err(Error::InvalidGrid(format!(
                "grid {}x{} is below the minimum {MIN_GRID_THETA}x{MIN_GRID_PSI}",
                self.n_theta, self.n_psi
            )));
        }
        if self.n_starts == 0 {
            return Err(Error::InvalidGrid("at least one refinement start is required".into()));
        }
        Ok(())
    }

    fn theta_step(&self) -> f64 {
        PI / (self.n_theta - 1) as f64
    }

    fn psi_step(&self) -> f64 {
        TAU / self.n_psi as f64
    }
}

/// Outcome of maximizing a function of the measurement direction.
#[derive(Debug, Clone)]
pub(crate) struct SphereOptimum {
    pub value: f64,
    /// Refined local maxima, canonicalized, best first.
    pub candidates: Vec<(MeasurementDirection, f64)>,
}

/// Maximizes `f` over the unit sphere.
pub(crate) fn sphere_maximize<F>(f: &F, grid: &GridConfig) -> Result<SphereOptimum>
where
    F: Fn(&MeasurementDirection) -> Result<f64> + Sync,
{
    grid.validate()?;
    let (dt, dp) = (grid.theta_step(), grid.psi_step());
    let rows: Vec<Vec<f64>> = (0..grid.n_theta)
        .into_par_iter()
        .map(|i| {
            (0..grid.n_psi)
                .map(|j| f(&MeasurementDirection::from_angles(i as f64 * dt, j as f64 * dp)))
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;

    let mut cells: Vec<(usize, usize, f64)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| (i, j, v)))
        .collect();
    cells.sort_by(|a, b| b.2.total_cmp(&a.2).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));

    let separation = 1.5 * dt.max(dp);
    let mut starts: Vec<[f64; 2]> = Vec::with_capacity(grid.n_starts);
    let mut chosen: Vec<MeasurementDirection> = Vec::with_capacity(grid.n_starts);
    for &(i, j, _) in &cells {
        let angles = [i as f64 * dt, j as f64 * dp];
        let dir = MeasurementDirection::from_angles(angles[0], angles[1]);
        if chosen.iter().all(|c| c.axis_angle(&dir) > separation) {
            chosen.push(dir);
            starts.push(angles);
            if starts.len() == grid.n_starts {
                break;
            }
        }
    }

    let options = NelderMeadOptions { max_iters: grid.refine_iters, tolerance: REFINE_TOL };
    let refined: Vec<(MeasurementDirection, f64)> = starts
        .par_iter()
        .map(|&x0| refine(f, x0, dt, options))
        .collect::<Result<_>>()?;

    let mut candidates: Vec<(MeasurementDirection, f64)> = Vec::new();
    let mut sorted = refined;
    sorted.sort_by(|a, b| b.1.total_cmp(&a.1));
    for (dir, value) in sorted {
        let dir = dir.canonical();
        if candidates.iter().all(|(c, _)| c.axis_angle(&dir) > CLUSTER_ANGLE) {
            candidates.push((dir, value));
        }
    }
    Ok(SphereOptimum { value: candidates[0].1, candidates })
}

fn refine<F>(f: &F, x0: [f64; 2], step: f64, options: NelderMeadOptions) -> Result<(MeasurementDirection, f64)>
where
    F: Fn(&MeasurementDirection) -> Result<f64>,
{
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let objective = |x: &[f64; 2]| match f(&MeasurementDirection::from_angles(x[0], x[1])) {
        Ok(v) => -v,
        Err(e) => {
            failure.borrow_mut().get_or_insert(e);
            f64::INFINITY
        }
    };
    let mut best = nelder_mead(objective, x0, step, options);
    let mut restart_step = step;
    for _ in 0..RESTARTS {
        restart_step *= 0.1;
        let next = nelder_mead(objective, best.x, restart_step, options);
        if next.value < best.value {
            best = next;
        } else {
            break;
        }
    }
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok((MeasurementDirection::from_angles(best.x[0], best.x[1]), -best.value))
}

/// Detects a continuous family of optimal directions through `best` by probing
/// its meridian and latitude circle.
pub(crate) fn detect_family<F>(f: &F, best: &MeasurementDirection, value: f64) -> Result<Option<OptimalFamily>>
where
    F: Fn(&MeasurementDirection) -> Result<f64>,
{
    let optimal = |theta: f64, psi: f64| -> Result<bool> {
        Ok(f(&MeasurementDirection::from_angles(theta, psi))? >= value - OPTIMUM_TOL)
    };
    let meridian_free = |psi: f64| -> Result<bool> {
        for k in 0..=PROBES {
            if !optimal(PI * k as f64 / PROBES as f64, psi)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let circle_free = |theta: f64| -> Result<bool> {
        for k in 0..PROBES {
            if !optimal(theta, TAU * k as f64 / PROBES as f64)? {
                return Ok(false);
            }
        }
        Ok(true)
    };

    let theta = best.theta();
    let at_pole = theta.sin() < 1e-3;
    let meridian_psi = if at_pole { best_equatorial_psi(f)? } else { best.psi() };
    if meridian_free(meridian_psi)? {
        if circle_free(FRAC_PI_2)? {
            return Ok(Some(OptimalFamily::FreeBoth));
        }
        return Ok(Some(OptimalFamily::FreeTheta { psi: meridian_psi.rem_euclid(PI) }));
    }
    if !at_pole && circle_free(theta)? {
        return Ok(Some(OptimalFamily::FreePsi { theta }));
    }
    Ok(None)
}

/// Azimuth maximizing `f` on the equator.
fn best_equatorial_psi<F>(f: &F) -> Result<f64>
where
    F: Fn(&MeasurementDirection) -> Result<f64>,
{
    const SAMPLES: usize = 64;
    let mut best = (0.0, f64::NEG_INFINITY);
    for k in 0..SAMPLES {
        let psi = PI * k as f64 / SAMPLES as f64;
        let v = f(&MeasurementDirection::from_angles(FRAC_PI_2, psi))?;
        if v > best.1 {
            best = (psi, v);
        }
    }
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let m = nelder_mead(
        |x: &[f64; 1]| match f(&MeasurementDirection::from_angles(FRAC_PI_2, x[0])) {
            Ok(v) => -v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::INFINITY
            }
        },
        [best.0],
        PI / SAMPLES as f64,
        NelderMeadOptions { max_iters: 200, tolerance: REFINE_TOL },
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(m.x[0])
}

/// Maximal fidelity to the A-classical states by direct search over
/// projective measurements on A.
pub fn max_fidelity_bruteforce(rho: &TwoQubitState, grid: &GridConfig) -> Result<DiscordResult> {
    let objective = Objective::new(rho)?;
    let f = |u: &MeasurementDirection| objective.fidelity(u);
    let found = sphere_maximize(&f, grid)?;
    let value = found.value.min(1.0);
    let directions: Vec<MeasurementDirection> = found
        .candidates
        .iter()
        .filter(|(_, v)| *v >= found.value - OPTIMUM_TOL)
        .map(|(d, _)| *d)
        .collect();
    let family = detect_family(&f, &directions[0], found.value)?;
    Ok(DiscordResult::new(value, directions, Method::Bruteforce, family))
}
