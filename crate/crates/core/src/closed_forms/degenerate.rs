use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::discord::{DiscordResult, MeasurementDirection, Method, OptimalFamily};
use crate::error::{Error, Result};
use crate::states::XStateParams;

/// Tolerance of the degeneracy preconditions.
pub const PRECONDITION_TOL: f64 = 1e-10;
const SIGN_TOL: f64 = 1e-12;

/// Coefficients of `det(λ - Λ(u)) = λ⁴ + t3 λ³ + t2 λ² + t1 λ + t0` for an
/// X-state at `u = (√(1-m²) cosψ, √(1-m²) sinψ, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CharPolyCoeffs {
    pub t3: f64,
    pub t2: f64,
    pub t1: f64,
    pub t0: f64,
    pub g: f64,
    pub delta: f64,
    /// Interior optimum of the printed table, when `g < 0` and `Δ < 0`.
    pub m_opt: Option<f64>,
}

/// `g = 2Σa² - 1 - 4(|x|² + |y|² - ad - bc) - 8|xy|`.
pub fn g_coefficient(p: &XStateParams) -> f64 {
    2.0 * (p.a * p.a + p.b * p.b + p.c * p.c + p.d * p.d)
        - 1.0
        - 4.0 * (p.x.norm_sqr() + p.y.norm_sqr() - p.a * p.d - p.b * p.c)
        - 8.0 * p.abs_xy()
}

/// `Δ = c + d - a - b`.
pub fn delta_coefficient(p: &XStateParams) -> f64 {
    p.c + p.d - p.a - p.b
}

/// `8|xy| + 4ac + 4bd`.
fn k_coefficient(p: &XStateParams) -> f64 {
    8.0 * p.abs_xy() + 4.0 * p.a * p.c + 4.0 * p.b * p.d
}

pub fn char_poly_coeffs(params: &XStateParams, m: f64, psi: f64) -> Result<CharPolyCoeffs> {
    params.validate()?;
    if !(-1.0..=1.0).contains(&m) {
        return Err(Error::InvalidParams(format!("m = {m} outside [-1, 1]")));
    }
    let XStateParams { a, b, c, d, x, y } = *params;
    let n = Complex64::from_polar((1.0 - m * m).sqrt(), psi);
    let h = 2.0 * (n * n * x * y).re + a * c + b * d;
    let t3 = m * (c + d - a - b);
    let t2 = m * m * (a * b - b * c - a * d + c * d + x.norm_sqr() + y.norm_sqr()) - h;
    let t1 = m * ((a - d) * params.bc_gap() + (b - c) * params.ad_gap());
    let t0 = params.det();
    let g = g_coefficient(params);
    let delta = delta_coefficient(params);
    let m_opt = match printed_optimal_m(params) {
        PrintedOptimalM::Interior(m) => Some(m),
        _ => None,
    };
    Ok(CharPolyCoeffs { t3, t2, t1, t0, g, delta, m_opt })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Lambda1Profile {
    pub lambda1: f64,
    pub g: f64,
    pub delta: f64,
}

/// `λ1(m) = ½(√(m² g + 8|xy| + 4ac + 4bd) - mΔ)`.
pub fn lambda1_profile(params: &XStateParams, m: f64) -> Result<Lambda1Profile> {
    params.validate()?;
    let g = g_coefficient(params);
    let delta = delta_coefficient(params);
    let lambda1 = 0.5 * ((m * m * g + k_coefficient(params)).max(0.0).sqrt() - m * delta);
    Ok(Lambda1Profile { lambda1, g, delta })
}

/// Optimal `m` from the sign table of `g` and `Δ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "m", rename_all = "snake_case")]
pub enum PrintedOptimalM {
    /// `g ≥ 0, Δ < 0`.
    One,
    /// `g ≤ 0, Δ ≥ 0`.
    Zero,
    /// `g ≥ 0, Δ ≥ 0`: both endpoints.
    ZeroAndOne,
    /// `g < 0, Δ < 0`: `-2√(2|xy| + ac + bd) Δ / √(g² - Δ² g)`.
    Interior(f64),
}

pub fn printed_optimal_m(params: &XStateParams) -> PrintedOptimalM {
    let g = g_coefficient(params);
    let delta = delta_coefficient(params);
    if g >= 0.0 && delta < 0.0 {
        PrintedOptimalM::One
    } else if g >= 0.0 {
        PrintedOptimalM::ZeroAndOne
    } else if delta >= 0.0 {
        PrintedOptimalM::Zero
    } else {
        let num = -2.0 * (2.0 * params.abs_xy() + params.a * params.c + params.b * params.d).sqrt() * delta;
        PrintedOptimalM::Interior(num / (g * g - delta * delta * g).sqrt())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "m", rename_all = "snake_case")]
pub enum DegenerateOptimum {
    Single(f64),
    /// `g = 0`: the value does not depend on `m`.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegenerateFidelity {
    pub fidelity: f64,
    pub m_opt: DegenerateOptimum,
    pub g: f64,
    pub delta: f64,
    /// Row of the printed sign table and the value `½ + λ1(m)` it predicts.
    pub printed_regime: PrintedOptimalM,
    pub printed_fidelity: f64,
}

/// Which degeneracy makes both `t0` and `t1` vanish.
fn degeneracy(params: &XStateParams) -> Result<()> {
    let tol = PRECONDITION_TOL;
    let both_gaps = params.ad_gap().abs() <= tol && params.bc_gap().abs() <= tol;
    let ad_edge = (params.a - params.d).abs() <= tol && (params.a - params.y.norm()).abs() <= tol;
    let bc_edge = (params.b - params.c).abs() <= tol && (params.b - params.x.norm()).abs() <= tol;
    if both_gaps || ad_edge || bc_edge {
        return Ok(());
    }
    let det = params.det();
    let mut failures = Vec::new();
    if det.abs() > tol {
        failures.push(format!("det = {det:.3e} does not vanish"));
    }
    let t1 = (params.a - params.d) * params.bc_gap() + (params.b - params.c) * params.ad_gap();
    if t1.abs() > tol || failures.is_empty() {
        failures.push(format!(
            "t1/m = {t1:.3e}; none of (ad = |y|², bc = |x|²), a = d = |y|, b = c = |x| holds"
        ));
    }
    Err(Error::PreconditionNotMet(failures.join("; ")))
}

/// Maximal fidelity when `t0 = t1 = 0`. The spectrum of `Λ(u)` is then
/// `{0, 0, r±}` and `F = ½(1 + |r+| + |r-|)`. With opposite signs this is
/// `½ + ½√(m² g + 8|xy| + 4ac + 4bd)` at the best azimuth, with equal signs it
/// is `½ + ½|mΔ|`; both are largest at an endpoint `m ∈ {0, 1}`.
pub fn degenerate_fidelity(params: &XStateParams) -> Result<DegenerateFidelity> {
    params.validate()?;
    degeneracy(params)?;
    let g = g_coefficient(params);
    let delta = delta_coefficient(params);
    let k = k_coefficient(params);
    let mixed_signs = (k + g.max(0.0)).max(0.0).sqrt();
    let fidelity = (0.5 + 0.5 * mixed_signs.max(delta.abs())).min(1.0);
    let m_opt = if delta.abs() > mixed_signs + SIGN_TOL {
        DegenerateOptimum::Single(1.0)
    } else if g.abs() <= SIGN_TOL {
        DegenerateOptimum::Both
    } else if g > 0.0 {
        DegenerateOptimum::Single(1.0)
    } else {
        DegenerateOptimum::Single(0.0)
    };
    let printed_regime = printed_optimal_m(params);
    let l = |m: f64| lambda1_profile(params, m).map(|p| p.lambda1);
    let printed_lambda = match printed_regime {
        PrintedOptimalM::One => l(1.0)?,
        PrintedOptimalM::Zero => l(0.0)?,
        PrintedOptimalM::ZeroAndOne => l(0.0)?.max(l(1.0)?),
        PrintedOptimalM::Interior(m) => l(m)?,
    };
    Ok(DegenerateFidelity { fidelity, m_opt, g, delta, printed_regime, printed_fidelity: 0.5 + printed_lambda })
}

/// [`degenerate_fidelity`] as a discord result. The witness is the z axis for
/// `m = 1` and the equatorial direction `ψ = -arg(xy)/2` for `m = 0`; when
/// `g = 0` the whole meridian through that azimuth is optimal.
pub fn degenerate_discord(params: &XStateParams) -> Result<(DiscordResult, DegenerateFidelity)> {
    let deg = degenerate_fidelity(params)?;
    let psi = (-0.5 * params.phase_xy()).rem_euclid(std::f64::consts::TAU);
    let free_psi = params.abs_xy() == 0.0;
    let (direction, family) = match deg.m_opt {
        DegenerateOptimum::Single(m) if m > 0.5 => (MeasurementDirection::z(), None),
        DegenerateOptimum::Single(_) => {
            let family = free_psi.then_some(OptimalFamily::FreePsi { theta: std::f64::consts::FRAC_PI_2 });
            (MeasurementDirection::from_angles(std::f64::consts::FRAC_PI_2, psi), family)
        }
        DegenerateOptimum::Both => {
            let family = if free_psi { OptimalFamily::FreeBoth } else { OptimalFamily::FreeTheta { psi } };
            (MeasurementDirection::z(), Some(family))
        }
    };
    Ok((DiscordResult::new(deg.fidelity, vec![direction.canonical()], Method::Degenerate, family), deg))
}
