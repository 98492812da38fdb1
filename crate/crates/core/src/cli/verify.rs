use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::closed_forms::{
    char_poly_coeffs, degenerate_fidelity, lambda1_profile, printed_optimal_m, symmetric_fidelity,
    x_candidate_discord, PrintedOptimalM,
};
use crate::discord::{
    helstrom_success, induced_ensemble, max_fidelity_bruteforce, GridConfig, MeasurementDirection, Objective,
};
use crate::linalg::herm_eigenvalues;
use crate::states::sampling::{
    random_angles, random_classical_params, random_degenerate_params, random_state, random_symmetric_params,
    random_unitary, random_x_params, rng_from_seed, unit_vector, SampleRng,
};
use crate::states::{classical_state, local_unitary, x_state, XStateParams};

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    /// Overrides every suite's own tolerance.
    pub tolerance: Option<f64>,
    pub grid: GridConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { seed: 42, samples: 40, tolerance: None, grid: GridConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub samples: usize,
    pub tolerance: f64,
    pub max_deviation: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
    /// Brute-force minus best-candidate fidelity on the printed
    /// counterexample state; informational.
    pub counterexample_candidate_gap: f64,
}

impl VerifyReport {
    pub fn text_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self
            .suites
            .iter()
            .map(|s| {
                format!(
                    "{} {:<22} samples={:<4} max_dev={:.3e} tol={:.1e}",
                    if s.passed { "PASS" } else { "FAIL" },
                    s.name,
                    s.samples,
                    s.max_deviation,
                    s.tolerance
                )
            })
            .collect();
        lines.push(format!("counterexample candidate gap = {:.3e}", self.counterexample_candidate_gap));
        lines
    }
}

type Job = Box<dyn FnOnce() -> crate::Result<f64> + Send>;
type Check = fn(&mut SampleRng, &GridConfig) -> crate::Result<Job>;

fn symmetric_suite(rng: &mut SampleRng, grid: &GridConfig) -> crate::Result<Job> {
    let p = random_symmetric_params(rng);
    let grid = *grid;
    Ok(Box::new(move || {
        let closed = symmetric_fidelity(&p)?.0.fidelity;
        let brute = max_fidelity_bruteforce(&x_state(&p)?, &grid)?.fidelity;
        Ok((closed - brute).abs())
    }))
}

fn candidate_suite(rng: &mut SampleRng, grid: &GridConfig) -> crate::Result<Job> {
    let p = random_x_params(rng);
    let grid = *grid;
    Ok(Box::new(move || {
        let candidate = x_candidate_discord(&p)?.0.fidelity;
        let brute = max_fidelity_bruteforce(&x_state(&p)?, &grid)?.fidelity;
        Ok((candidate - brute).max(0.0))
    }))
}

fn unitary_suite(rng: &mut SampleRng, grid: &GridConfig) -> crate::Result<Job> {
    let p = random_x_params(rng);
    let (ua, ub) = (random_unitary(rng), random_unitary(rng));
    let grid = *grid;
    Ok(Box::new(move || {
        let rho = x_state(&p)?;
        let rotated = local_unitary(&rho, &ua, &ub)?;
        let f0 = max_fidelity_bruteforce(&rho, &grid)?.fidelity;
        let f1 = max_fidelity_bruteforce(&rotated, &grid)?.fidelity;
        Ok((f0 - f1).abs())
    }))
}

fn bridge_suite(rng: &mut SampleRng, _: &GridConfig) -> crate::Result<Job> {
    let rank = rng.gen_range(1..=4);
    let rho = random_state(rng, rank);
    let u = MeasurementDirection::normalized(unit_vector(rng))?;
    Ok(Box::new(move || {
        let objective = Objective::new(&rho)?.fidelity(&u)?;
        let success = helstrom_success(&induced_ensemble(&rho, &u)?)?;
        Ok((objective - success).abs())
    }))
}

fn zero_discord_suite(rng: &mut SampleRng, grid: &GridConfig) -> crate::Result<Job> {
    let params = random_classical_params(rng);
    let grid = *grid;
    Ok(Box::new(move || Ok(max_fidelity_bruteforce(&classical_state(&params)?, &grid)?.discord)))
}

fn degenerate_suite(rng: &mut SampleRng, grid: &GridConfig) -> crate::Result<Job> {
    let p = random_degenerate_params(rng);
    let grid = *grid;
    Ok(Box::new(move || {
        let closed = degenerate_fidelity(&p)?.fidelity;
        let brute = max_fidelity_bruteforce(&x_state(&p)?, &grid)?.fidelity;
        Ok((closed - brute).abs())
    }))
}

fn char_poly_suite(rng: &mut SampleRng, _: &GridConfig) -> crate::Result<Job> {
    let p = random_x_params(rng);
    let (theta, psi) = random_angles(rng);
    Ok(Box::new(move || {
        let u = MeasurementDirection::from_angles(theta, psi);
        let c = char_poly_coeffs(&p, u.m(), psi)?;
        let rho = x_state(&p)?;
        let l = herm_eigenvalues(&Objective::new(&rho)?.lambda(&u))?;
        let e1: f64 = l.iter().sum();
        let mut e2 = 0.0;
        let mut e3 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                e2 += l[i] * l[j];
                for k in j + 1..4 {
                    e3 += l[i] * l[j] * l[k];
                }
            }
        }
        let e4: f64 = l.iter().product();
        Ok([(c.t3 + e1).abs(), (c.t2 - e2).abs(), (c.t1 + e3).abs(), (c.t0 - e4).abs()].into_iter().fold(0.0, f64::max))
    }))
}

const SUITES: [(&str, Check, f64); 7] = [
    ("symmetric_closed_form", symmetric_suite, 2e-6),
    ("candidate_bound", candidate_suite, 1e-9),
    ("local_unitary", unitary_suite, 2e-6),
    ("qsd_bridge", bridge_suite, 1e-9),
    ("zero_discord", zero_discord_suite, 1e-6),
    ("degenerate_formula", degenerate_suite, 1e-6),
    ("char_poly", char_poly_suite, 1e-10),
];

fn reference_state() -> XStateParams {
    let (t, s) = (1.0 / 3.0, 1.0 / 6.0);
    XStateParams::new(t, t, s, s, Complex64::new(s, 0.0), Complex64::new(s, 0.0)).expect("valid printed state")
}

/// Largest error over the printed `g`, `Δ`, `m_opt` and `λ1` values.
fn reference_regression() -> crate::Result<f64> {
    let p = reference_state();
    let prof = |m: f64| lambda1_profile(&p, m);
    let PrintedOptimalM::Interior(m_opt) = printed_optimal_m(&p) else {
        return Ok(f64::INFINITY);
    };
    let p0 = prof(0.0)?;
    let errors = [
        p0.g + 4.0 / 9.0,
        p0.delta + 1.0 / 3.0,
        m_opt - 0.3f64.sqrt(),
        p0.lambda1 - 1.0 / 6f64.sqrt(),
        prof(1.0)?.lambda1 - (2f64.sqrt() + 1.0) / 6.0,
        prof(m_opt)?.lambda1 - (5.0f64 / 24.0).sqrt(),
    ];
    Ok(errors.iter().map(|e| e.abs()).fold(0.0, f64::max))
}

pub fn cmd_verify(options: &VerifyOptions) -> Result<VerifyReport, CliError> {
    options.grid.validate()?;
    let mut suites = Vec::new();
    for (index, (name, check, tol)) in SUITES.iter().enumerate() {
        let mut rng = rng_from_seed(options.seed.wrapping_add(index as u64));
        let jobs = (0..options.samples).map(|_| check(&mut rng, &options.grid)).collect::<crate::Result<Vec<_>>>()?;
        let deviations = jobs.into_par_iter().map(|job| job()).collect::<crate::Result<Vec<f64>>>()?;
        let max_deviation = deviations.into_iter().fold(0.0, f64::max);
        let tolerance = options.tolerance.unwrap_or(*tol);
        suites.push(SuiteReport {
            name: name.to_string(),
            samples: options.samples,
            tolerance,
            max_deviation,
            passed: max_deviation <= tolerance,
        });
    }
    let tolerance = options.tolerance.unwrap_or(1e-12);
    let max_deviation = reference_regression()?;
    suites.push(SuiteReport {
        name: "reference_regression".into(),
        samples: 1,
        tolerance,
        max_deviation,
        passed: max_deviation <= tolerance,
    });
    let p = reference_state();
    let brute = max_fidelity_bruteforce(&x_state(&p)?, &options.grid)?.fidelity;
    let gap = brute - x_candidate_discord(&p)?.0.fidelity;
    let passed = suites.iter().all(|s| s.passed);
    Ok(VerifyReport { seed: options.seed, suites, passed, counterexample_candidate_gap: gap })
}
