use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::spec::{MatrixSpec, ResolvedState, StateSpec, SweepMethod, SweepSpec};
use super::{CliError, DiscordMethod};
use crate::closed_forms::{
    classical_correlation_symmetric, degenerate_discord, symmetric_ccs, symmetric_fidelity, x_candidate_discord,
    x_ccs_z, CcsChoice,
};
use crate::discord::{
    ccs_from_measurement, entropic_discord, max_fidelity_bruteforce, DiscordResult, GridConfig,
    MeasurementDirection, Method, OptimalFamily,
};
use crate::linalg::{bures_distance_sq, fidelity};
use crate::states::{x_state, TwoQubitState, XStateParams, SYMMETRIC_TOL};

/// Brute-force discord below which a state counts as A-classical.
pub const ZERO_DISCORD_TOL: f64 = 1e-6;
/// Largest angle to the z axis at which a numerical optimum counts as axial.
const AXIAL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Angles {
    pub theta: f64,
    pub psi: f64,
}

impl From<&MeasurementDirection> for Angles {
    fn from(u: &MeasurementDirection) -> Self {
        Self { theta: u.theta(), psi: u.psi() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscordReport {
    pub fidelity: f64,
    pub discord: f64,
    pub method: Method,
    pub optimal_directions: Vec<Angles>,
    pub degenerate_family: Option<OptimalFamily>,
    pub dispatch: Vec<String>,
    /// Best closed-form candidate fidelity when candidates were evaluated.
    pub candidate_fidelity: Option<f64>,
    /// Brute-force fidelity minus `candidate_fidelity`.
    pub candidate_gap: Option<f64>,
}

impl DiscordReport {
    fn from_result(r: &DiscordResult, dispatch: Vec<String>) -> Self {
        Self {
            fidelity: r.fidelity,
            discord: r.discord,
            method: r.method,
            optimal_directions: r.optimal_directions.iter().map(Angles::from).collect(),
            degenerate_family: r.degenerate_family,
            dispatch,
            candidate_fidelity: None,
            candidate_gap: None,
        }
    }
}

fn require_x(resolved: &ResolvedState, what: &str) -> Result<XStateParams, CliError> {
    resolved
        .x_params
        .ok_or_else(|| CliError::invalid("not_x_state", format!("{what} requires an X-state input")))
}

fn symmetric(p: &XStateParams) -> bool {
    p.is_symmetric(SYMMETRIC_TOL)
}

/// Exact closed form for the symmetric family or the degenerate case.
fn closed_form(p: &XStateParams, dispatch: &mut Vec<String>) -> Result<Option<DiscordResult>, CliError> {
    if symmetric(p) {
        dispatch.push("symmetric family (a = d, b = c) -> symmetric_fidelity".into());
        return Ok(Some(symmetric_fidelity(p)?.0));
    }
    dispatch.push("not in the symmetric family".into());
    match degenerate_discord(p) {
        Ok((r, _)) => {
            dispatch.push("degenerate preconditions hold -> degenerate_fidelity".into());
            Ok(Some(r))
        }
        Err(crate::Error::PreconditionNotMet(msg)) => {
            dispatch.push(format!("degenerate preconditions fail ({msg})"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn cmd_discord(spec: &StateSpec, method: DiscordMethod, grid: &GridConfig) -> Result<DiscordReport, CliError> {
    let resolved = spec.resolve()?;
    let rho = resolved.state;
    let mut dispatch = Vec::new();
    match method {
        DiscordMethod::Bruteforce => {
            dispatch.push("bruteforce requested".into());
            Ok(DiscordReport::from_result(&max_fidelity_bruteforce(&rho, grid)?, dispatch))
        }
        DiscordMethod::Candidates => {
            let p = require_x(&resolved, "method candidates")?;
            dispatch.push("candidates requested -> max(axial, equatorial)".into());
            let (r, _) = x_candidate_discord(&p)?;
            let mut report = DiscordReport::from_result(&r, dispatch);
            report.candidate_fidelity = Some(r.fidelity);
            Ok(report)
        }
        DiscordMethod::Closed => {
            let p = require_x(&resolved, "method closed")?;
            match closed_form(&p, &mut dispatch)? {
                Some(r) => Ok(DiscordReport::from_result(&r, dispatch)),
                None => Err(CliError::invalid(
                    "precondition_not_met",
                    "no exact closed form applies to this state; use --method candidates or auto".into(),
                )),
            }
        }
        DiscordMethod::Auto => {
            let Some(p) = resolved.x_params else {
                dispatch.push("not an X-state -> bruteforce".into());
                return Ok(DiscordReport::from_result(&max_fidelity_bruteforce(&rho, grid)?, dispatch));
            };
            if let Some(r) = closed_form(&p, &mut dispatch)? {
                return Ok(DiscordReport::from_result(&r, dispatch));
            }
            dispatch.push("candidates + bruteforce, bruteforce authoritative".into());
            let (candidate, _) = x_candidate_discord(&p)?;
            let brute = max_fidelity_bruteforce(&rho, grid)?;
            let mut report = DiscordReport::from_result(&brute, dispatch);
            report.candidate_fidelity = Some(candidate.fidelity);
            report.candidate_gap = Some(brute.fidelity - candidate.fidelity);
            Ok(report)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CcsReport {
    pub ccs: MatrixSpec,
    /// Optimal fidelity the construction is meant to attain.
    pub claimed_fidelity: f64,
    /// `F(ρ, σ)` recomputed from the matrices.
    pub fidelity_check: f64,
    pub source: String,
    pub direction: Option<Angles>,
    pub degenerate_projector: bool,
    /// Brute-force discord of the emitted state.
    pub ccs_discord: f64,
    pub a_classical: bool,
}

pub fn cmd_ccs(
    spec: &StateSpec,
    direction: Option<(f64, f64)>,
    r: Option<f64>,
    grid: &GridConfig,
) -> Result<CcsReport, CliError> {
    let resolved = spec.resolve()?;
    let rho = resolved.state;
    let mut degenerate_projector = false;
    let (sigma, claimed, source, dir): (TwoQubitState, f64, String, Option<MeasurementDirection>) =
        if let Some(r) = r {
            let p = require_x(&resolved, "--r")?;
            let out = symmetric_ccs(&p, CcsChoice::R(r))?;
            let claimed = symmetric_fidelity(&p)?.0.fidelity;
            let source = serde_json::to_value(out.source).expect("enum serialization");
            (out.state, claimed, source.as_str().unwrap_or("r_family").to_string(), None)
        } else if let Some((theta, psi)) = direction {
            let u = MeasurementDirection::from_angles(theta, psi);
            let out = ccs_from_measurement(&rho, &u)?;
            degenerate_projector = out.degenerate_projector;
            (out.state, out.objective, "measurement_override".into(), Some(u))
        } else {
            match resolved.x_params {
                Some(p) if symmetric(&p) => {
                    let (best, _) = symmetric_fidelity(&p)?;
                    let u = best.optimal_directions[0];
                    let out = ccs_from_measurement(&rho, &u)?;
                    degenerate_projector = out.degenerate_projector;
                    (out.state, best.fidelity, "symmetric_measurement".into(), Some(u))
                }
                x => {
                    let best = max_fidelity_bruteforce(&rho, grid)?;
                    let u = best.optimal_directions[0];
                    let axial = best.degenerate_family.is_none() && u.axis_angle(&MeasurementDirection::z()) < AXIAL_TOL;
                    match x {
                        Some(p) if axial => (x_ccs_z(&p)?, best.fidelity, "axial_closed_form".into(), Some(u)),
                        _ => {
                            let out = ccs_from_measurement(&rho, &u)?;
                            degenerate_projector = out.degenerate_projector;
                            (out.state, best.fidelity, "measurement".into(), Some(u))
                        }
                    }
                }
            }
        };
    let fidelity_check = fidelity(rho.matrix(), sigma.matrix())?;
    let ccs_discord = max_fidelity_bruteforce(&sigma, grid)?.discord;
    Ok(CcsReport {
        ccs: sigma.matrix().into(),
        claimed_fidelity: claimed,
        fidelity_check,
        source,
        direction: dir.as_ref().map(Angles::from),
        degenerate_projector,
        ccs_discord,
        a_classical: ccs_discord <= ZERO_DISCORD_TOL,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalReport {
    pub c_bu: f64,
    pub closest_product: MatrixSpec,
    /// `d_B²(ρ, I/4)` evaluated numerically.
    pub numeric_distance_to_product: f64,
}

pub fn cmd_classical(spec: &StateSpec) -> Result<ClassicalReport, CliError> {
    let resolved = spec.resolve()?;
    let p = resolved
        .x_params
        .ok_or_else(|| CliError::invalid("not_symmetric_family", "state is not an X-state".into()))?;
    let cc = classical_correlation_symmetric(&p)?;
    let numeric = bures_distance_sq(resolved.state.matrix(), cc.closest_product.matrix())?;
    Ok(ClassicalReport {
        c_bu: cc.c_bu,
        closest_product: cc.closest_product.matrix().into(),
        numeric_distance_to_product: numeric,
    })
}

pub const SWEEP_COLUMNS: [&str; 9] = [
    "param_value",
    "fidelity",
    "discord",
    "theta_opt",
    "psi_opt",
    "method",
    "candidate_gap",
    "classical_corr",
    "entropic_discord",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub param_value: f64,
    pub fidelity: f64,
    pub discord: f64,
    pub theta_opt: Option<f64>,
    pub psi_opt: Option<f64>,
    pub method: Method,
    pub candidate_gap: Option<f64>,
    pub classical_corr: Option<f64>,
    pub entropic_discord: Option<f64>,
}

fn sweep_row(spec: &SweepSpec, t: f64, grid: &GridConfig) -> Result<SweepRow, CliError> {
    let p = spec.state_at(t)?;
    let rho = x_state(&p)?;
    let wants = |m: SweepMethod| spec.methods.contains(&m);
    let brute = max_fidelity_bruteforce(&rho, grid)?;
    let closed = if wants(SweepMethod::Closed) { closed_form(&p, &mut Vec::new())? } else { None };
    let candidate = if closed.is_none() && wants(SweepMethod::Candidates) {
        Some(x_candidate_discord(&p)?.0)
    } else {
        None
    };
    let other = closed.or(candidate);
    let reported = match &other {
        Some(r) if !wants(SweepMethod::Bruteforce) => r,
        _ => &brute,
    };
    let dir = reported.direction();
    let classical_corr = if symmetric(&p) { Some(classical_correlation_symmetric(&p)?.c_bu) } else { None };
    let entropic = if wants(SweepMethod::Entropic) { Some(entropic_discord(&rho, grid)?.discord) } else { None };
    Ok(SweepRow {
        param_value: t,
        fidelity: reported.fidelity,
        discord: reported.discord,
        theta_opt: dir.map(|u| u.theta()),
        psi_opt: dir.map(|u| u.psi()),
        method: reported.method,
        candidate_gap: other.as_ref().map(|r| brute.fidelity - r.fidelity),
        classical_corr,
        entropic_discord: entropic,
    })
}

/// Rows of a sweep, evaluated in parallel and returned in parameter order.
pub fn sweep_rows(spec: &SweepSpec, grid: &GridConfig) -> Result<Vec<SweepRow>, CliError> {
    spec.validate()?;
    spec.param_values().into_par_iter().map(|t| sweep_row(spec, t, grid)).collect()
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt17).unwrap_or_default()
}

pub fn cmd_sweep(spec: &SweepSpec, grid: &GridConfig) -> Result<String, CliError> {
    let rows = sweep_rows(spec, grid)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(SWEEP_COLUMNS).map_err(io)?;
    for r in &rows {
        w.write_record([
            fmt17(r.param_value),
            fmt17(r.fidelity),
            fmt17(r.discord),
            fmt_opt(r.theta_opt),
            fmt_opt(r.psi_opt),
            r.method.to_string(),
            fmt_opt(r.candidate_gap),
            fmt_opt(r.classical_corr),
            fmt_opt(r.entropic_discord),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> GridConfig {
        GridConfig { n_theta: 32, n_psi: 64, ..GridConfig::default() }
    }

    #[test]
    fn werner_endpoints() {
        let r = cmd_discord(&StateSpec::werner(0.0), DiscordMethod::Auto, &grid()).unwrap();
        assert!(r.discord.abs() < 1e-12);
        let r = cmd_discord(&StateSpec::werner(1.0), DiscordMethod::Auto, &grid()).unwrap();
        assert!((r.discord - (2.0 - 2f64.sqrt())).abs() < 2e-6);
        assert_eq!(r.method, Method::SymmetricClosed);
    }

    #[test]
    fn closed_method_rejects_generic_state() {
        let p = XStateParams::new(0.4, 0.3, 0.2, 0.1, num_complex::Complex64::new(0.05, 0.0), num_complex::Complex64::new(0.1, 0.0))
            .unwrap();
        let err = cmd_discord(&StateSpec::x_state(&p), DiscordMethod::Closed, &grid()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let auto = cmd_discord(&StateSpec::x_state(&p), DiscordMethod::Auto, &grid()).unwrap();
        assert!(auto.candidate_gap.unwrap() > -1e-9);
    }

    #[test]
    fn bell_ccs() {
        let spec = StateSpec::matrix(TwoQubitState::bell_phi_plus().matrix());
        let r = cmd_ccs(&spec, None, None, &grid()).unwrap();
        assert!((r.fidelity_check - 0.5).abs() < 1e-6);
        assert!(r.a_classical);
    }

    #[test]
    fn classical_correlation_of_bell() {
        let spec = StateSpec::matrix(TwoQubitState::bell_phi_plus().matrix());
        let r = cmd_classical(&spec).unwrap();
        assert!((r.c_bu - 1.0).abs() < 1e-12);
        assert!((r.numeric_distance_to_product - 1.0).abs() < 1e-9);
    }

    #[test]
    fn sweep_csv_shape() {
        let spec: SweepSpec =
            serde_json::from_str(r#"{"family":{"kind":"werner","from":0.2,"to":0.6},"steps":2,"methods":["closed"]}"#)
                .unwrap();
        let csv = cmd_sweep(&spec, &grid()).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], SWEEP_COLUMNS.join(","));
        assert!(lines[1].contains("symmetric_closed"));
    }
}
