use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::degenerate::{degenerate_fidelity, DegenerateOptimum};
use crate::discord::{DiscordResult, MeasurementDirection, Method};
use crate::error::Result;
use crate::linalg::{ComplexMatrix2, ComplexMatrix4, ZERO};
use crate::states::{x_state, TwoQubitState, XStateParams};

/// Normalization below which a closed-form eigenvector term is dropped.
const NORM_FLOOR: f64 = 1e-300;

/// `τ = (b+c)² - 4|x|²`.
fn tau(p: &XStateParams) -> f64 {
    (p.b + p.c).powi(2) - 4.0 * p.x.norm_sqr()
}

/// `κ = (a+d)² - 4|y|²`.
fn kappa(p: &XStateParams) -> f64 {
    (p.a + p.d).powi(2) - 4.0 * p.y.norm_sqr()
}

/// Fidelity for the measurement along z:
/// `½(1 + √((b+c)² - 4|x|²) + √((a+d)² - 4|y|²))`.
pub fn x_fidelity_z(params: &XStateParams) -> Result<f64> {
    params.validate()?;
    Ok(0.5 * (1.0 + tau(params).max(0.0).sqrt() + kappa(params).max(0.0).sqrt()))
}

/// Optimal azimuth among equatorial measurements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EquatorialOptimum {
    Fixed { psi: f64 },
    /// `|xy| = 0`: every azimuth gives the same value.
    FreePsi,
}

impl EquatorialOptimum {
    /// A representative direction (ψ = 0 for the free family).
    pub fn direction(&self) -> MeasurementDirection {
        match *self {
            EquatorialOptimum::Fixed { psi } => MeasurementDirection::from_angles(FRAC_PI_2, psi),
            EquatorialOptimum::FreePsi => MeasurementDirection::from_angles(FRAC_PI_2, 0.0),
        }
    }
}

/// Best equatorial fidelity `½ + √(2|xy| + ac + bd + 2√k)` with
/// `k = (ad - |y|²)(bc - |x|²)`, attained at `ψ = -arg(xy)/2`.
pub fn x_fidelity_equatorial(params: &XStateParams) -> Result<(f64, EquatorialOptimum)> {
    params.validate()?;
    let h_max = 2.0 * params.abs_xy() + params.a * params.c + params.b * params.d;
    let k = params.det().max(0.0);
    let f = 0.5 + (h_max + 2.0 * k.sqrt()).max(0.0).sqrt();
    let optimum = if params.abs_xy() == 0.0 {
        EquatorialOptimum::FreePsi
    } else {
        EquatorialOptimum::Fixed { psi: (-0.5 * params.phase_xy()).rem_euclid(TAU) }
    };
    Ok((f, optimum))
}

/// Diagonal closest classical state for the measurement along z.
///
/// With `ψ4 = ((a+d)+√κ, 0, 0, -2ȳ)` and `ψ2 = (0, (b+c)+√τ, -2x̄, 0)` the
/// leading eigenvectors of `(σ3⊗I)ρ`, and `M = Σ ρψψ†ρ / <ψ|ρ|ψ>`, the state is
/// `F'^{-1} (|0><0| ⊗ <0|M|0> + |1><1| ⊗ <1|ρ - M|1>)`.
pub fn x_ccs_z(params: &XStateParams) -> Result<TwoQubitState> {
    let f = x_fidelity_z(params)?;
    let rho = x_state(params)?;
    let mut psi4 = [ZERO; 4];
    psi4[0] = Complex64::new(params.a + params.d + kappa(params).max(0.0).sqrt(), 0.0);
    psi4[3] = -2.0 * params.y.conj();
    let mut psi2 = [ZERO; 4];
    psi2[1] = Complex64::new(params.b + params.c + tau(params).max(0.0).sqrt(), 0.0);
    psi2[2] = -2.0 * params.x.conj();

    let mut m = ComplexMatrix4::zeros();
    for psi in [psi2, psi4] {
        let w = rho.mul_vec(&psi);
        let n: f64 = psi.iter().zip(&w).map(|(p, q)| (p.conj() * q).re).sum();
        if n > NORM_FLOOR {
            m += ComplexMatrix4::outer(&w, &w).scale(1.0 / n);
        }
    }
    let rest = *rho.matrix() - m;
    let block = |src: &ComplexMatrix4, a: usize| ComplexMatrix2::from_fn(|j, k| src.0[2 * a + j][2 * a + k]);
    let p0 = ComplexMatrix2::from_real_diagonal([1.0, 0.0]);
    let p1 = ComplexMatrix2::from_real_diagonal([0.0, 1.0]);
    let sigma = p0.kron(&block(&m, 0)) + p1.kron(&block(&rest, 1));
    Ok(TwoQubitState::from_matrix_unchecked(sigma.scale(1.0 / f)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Candidate {
    Axial,
    Equatorial,
}

/// Intermediate quantities of the two X-state candidates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CandidateBreakdown {
    pub f_axial: f64,
    pub f_equatorial: f64,
    pub h_max: f64,
    pub k: f64,
    pub tau: f64,
    pub kappa: f64,
    pub chosen: Candidate,
}

/// Larger of the axial and equatorial candidate fidelities. The returned
/// discord is an upper bound on the true value, exact whenever the optimal
/// measurement is axial or equatorial.
pub fn x_candidate_discord(params: &XStateParams) -> Result<(DiscordResult, CandidateBreakdown)> {
    let f_axial = x_fidelity_z(params)?;
    let (f_equatorial, optimum) = x_fidelity_equatorial(params)?;
    let chosen = if f_axial >= f_equatorial { Candidate::Axial } else { Candidate::Equatorial };
    let breakdown = CandidateBreakdown {
        f_axial,
        f_equatorial,
        h_max: 2.0 * params.abs_xy() + params.a * params.c + params.b * params.d,
        k: params.det(),
        tau: tau(params),
        kappa: kappa(params),
        chosen,
    };
    let (f, dir) = match chosen {
        Candidate::Axial => (f_axial, MeasurementDirection::z()),
        Candidate::Equatorial => (f_equatorial, optimum.direction().canonical()),
    };
    Ok((DiscordResult::new(f, vec![dir], Method::XCandidates, None), breakdown))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UpperBound {
    pub d_upper: f64,
    pub fidelity: f64,
    pub witness: MeasurementDirection,
}

/// Discord upper bound from the best closed-form candidate: axial,
/// equatorial and, when its preconditions hold, the degenerate formula.
pub fn discord_upper_bound(params: &XStateParams) -> Result<UpperBound> {
    let (candidate, _) = x_candidate_discord(params)?;
    let mut fidelity = candidate.fidelity;
    let mut witness = candidate.optimal_directions[0];
    if let Ok(deg) = degenerate_fidelity(params) {
        if deg.fidelity > fidelity {
            fidelity = deg.fidelity;
            let m = match deg.m_opt {
                DegenerateOptimum::Single(m) => m,
                DegenerateOptimum::Both => 1.0,
            };
            let psi = -0.5 * params.phase_xy();
            witness = MeasurementDirection::from_angles(m.clamp(-1.0, 1.0).acos(), psi).canonical();
        }
    }
    let fidelity = fidelity.min(1.0);
    Ok(UpperBound { d_upper: crate::discord::discord_from_fidelity(fidelity), fidelity, witness })
}
