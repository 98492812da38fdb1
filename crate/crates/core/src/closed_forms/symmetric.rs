use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::discord::{ccs_from_measurement, DiscordResult, MeasurementDirection, Method, OptimalFamily};
use crate::error::Result;
use crate::linalg::{paulis, ComplexMatrix2, ComplexMatrix4};
use crate::states::{bell_diagonal_frame, x_state, BellDiagonalFrame, TwoQubitState, XStateParams};

/// Tolerance of the `|a - b|` versus `|x| + |y|` comparison.
pub const BRANCH_TOL: f64 = 1e-12;
/// Bell-diagonal weights below this count as zero when selecting a CCS branch.
pub const ZERO_WEIGHT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetricCase {
    /// `|a - b| > |x| + |y|`: optimum on the z axis.
    Axial,
    /// `|a - b| < |x| + |y|`: optimum on the equator.
    Equatorial,
    /// Equality: the two values coincide and a whole arc is optimal.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymmetricBranch {
    pub case: SymmetricCase,
    /// `|xy| = 0`, which frees the azimuth.
    pub xy_vanishes: bool,
    /// Optimal family, `None` when the optimum is a single direction.
    pub family: Option<OptimalFamily>,
    /// `½ + √(p1 p2) + √(p3 p4)`, the axial value.
    pub f_axial: f64,
    /// `½ + √(p2 p4) + √(p1 p3)`, the equatorial value.
    pub f_equatorial: f64,
}

/// Exact maximal fidelity for the a = d, b = c family.
pub fn symmetric_fidelity(params: &XStateParams) -> Result<(DiscordResult, SymmetricBranch)> {
    crate::states::symmetric_to_bd(params)?;
    let (a, b) = (params.a, params.b);
    let (ax, ay) = (params.x.norm(), params.y.norm());
    let [p1, p2, p3, p4] = [b - ax, b + ax, a - ay, a + ay].map(|p| p.max(0.0));
    let f_axial = 0.5 + (p1 * p2).sqrt() + (p3 * p4).sqrt();
    let f_equatorial = 0.5 + (p2 * p4).sqrt() + (p1 * p3).sqrt();

    let gap = (a - b).abs() - (ax + ay);
    let case = if gap.abs() <= BRANCH_TOL {
        SymmetricCase::Boundary
    } else if gap > 0.0 {
        SymmetricCase::Axial
    } else {
        SymmetricCase::Equatorial
    };
    let xy_vanishes = params.abs_xy() == 0.0;
    let psi = (-0.5 * params.phase_xy()).rem_euclid(TAU);
    let equatorial = MeasurementDirection::from_angles(FRAC_PI_2, psi).canonical();
    let axial = MeasurementDirection::z();

    let (fidelity, directions, family) = match case {
        SymmetricCase::Axial => (f_axial, vec![axial], None),
        SymmetricCase::Equatorial if xy_vanishes => {
            (f_equatorial, vec![equatorial], Some(OptimalFamily::FreePsi { theta: FRAC_PI_2 }))
        }
        SymmetricCase::Equatorial => (f_equatorial, vec![equatorial], None),
        SymmetricCase::Boundary if xy_vanishes => (f_axial, vec![axial], Some(OptimalFamily::FreeBoth)),
        SymmetricCase::Boundary => (
            f_axial,
            vec![axial, equatorial],
            Some(OptimalFamily::FreeTheta { psi: psi.rem_euclid(PI) }),
        ),
    };
    let branch = SymmetricBranch { case, xy_vanishes, family, f_axial, f_equatorial };
    Ok((DiscordResult::new(fidelity, directions, Method::SymmetricClosed, family), branch))
}

/// Which part of the locally equivalent Bell-diagonal CCS carries the free
/// parameter `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BdBranch {
    /// `p'_0 p'_m = 0`, the other weights positive: `r` splits the
    /// anti-aligned block.
    AntiAligned,
    /// `p'_0 p'_m > 0` and `p'_1 p'_2 p'_3 = 0`: `r` splits the aligned block.
    Aligned,
    /// Neither condition holds; no explicit family is available.
    NotPrinted,
}

/// Data of the Bell-diagonal representative of a symmetric state.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BdTransport {
    pub frame: BellDiagonalFrame,
    pub c_prime: [f64; 3],
    /// `(p'_0, p'_1, p'_2, p'_3)`.
    pub weights: [f64; 4],
    /// `q_1, q_2, q_3`.
    pub q: [f64; 3],
    /// Optimal measurement axis (1, 2 or 3) in the Bell-diagonal frame.
    pub axis: usize,
    pub branch: BdBranch,
}

fn others(m: usize) -> (usize, usize) {
    match m {
        1 => (2, 3),
        2 => (1, 3),
        _ => (1, 2),
    }
}

/// `½ + √(p'_0 p'_m) + √(p'_n p'_k)`.
fn axis_fidelity(p: &[f64; 4], m: usize) -> f64 {
    let (n, k) = others(m);
    0.5 + (p[0] * p[m]).sqrt() + (p[n] * p[k]).sqrt()
}

fn branch_for(p: &[f64; 4], m: usize) -> BdBranch {
    let (n, k) = others(m);
    let zero = |v: f64| v <= ZERO_WEIGHT_TOL;
    if (zero(p[0]) || zero(p[m])) && !zero(p[n]) && !zero(p[k]) {
        BdBranch::AntiAligned
    } else if !zero(p[0]) && !zero(p[m]) && (zero(p[1]) || zero(p[2]) || zero(p[3])) {
        BdBranch::Aligned
    } else {
        BdBranch::NotPrinted
    }
}

pub fn bd_transport(params: &XStateParams) -> Result<BdTransport> {
    let frame = bell_diagonal_frame(params)?;
    let c = frame.c_prime;
    let p = frame.weights().map(|v| v.max(0.0));
    let q = std::array::from_fn(|i| {
        let m = i + 1;
        let (n, k) = others(m);
        let (s_nk, s_0m) = ((p[n] * p[k]).sqrt(), (p[0] * p[m]).sqrt());
        0.5 + (2.0 * s_nk - 2.0 * s_0m + c[i]) / (4.0 * s_nk + 4.0 * s_0m + 2.0)
    });
    let best = (1..=3).map(|m| axis_fidelity(&p, m)).fold(f64::NEG_INFINITY, f64::max);
    let optimal: Vec<usize> = (1..=3).filter(|&m| axis_fidelity(&p, m) >= best - ZERO_WEIGHT_TOL).collect();
    let axis = optimal
        .iter()
        .copied()
        .find(|&m| branch_for(&p, m) != BdBranch::NotPrinted)
        .unwrap_or(optimal[0]);
    Ok(BdTransport { frame, c_prime: c, weights: p, q, axis, branch: branch_for(&p, axis) })
}

/// How [`symmetric_ccs`] should pick a closest classical state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CcsChoice {
    /// Member `r ∈ [-1, 1]` of the explicit family when one exists.
    R(f64),
    /// Measurement construction at the optimal direction.
    Measurement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CcsSource {
    RFamily,
    Measurement,
    /// An r-family was requested but the state lies outside both printed
    /// branches; the measurement construction was used instead.
    BranchNotPrinted,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SymmetricCcs {
    pub state: TwoQubitState,
    pub fidelity: f64,
    pub source: CcsSource,
    pub branch: BdBranch,
}

/// Closest classical state of a symmetric X-state.
pub fn symmetric_ccs(params: &XStateParams, choice: CcsChoice) -> Result<SymmetricCcs> {
    let transport = bd_transport(params)?;
    let rho = x_state(params)?;
    if let CcsChoice::R(r) = choice {
        if transport.branch != BdBranch::NotPrinted {
            let r = r.clamp(-1.0, 1.0);
            let frame_state = r_family_state(&transport, r);
            let state = transport.frame.from_frame(&frame_state)?;
            let fidelity = crate::linalg::fidelity(rho.matrix(), state.matrix())?;
            return Ok(SymmetricCcs { state, fidelity, source: CcsSource::RFamily, branch: transport.branch });
        }
    }
    let (best, _) = symmetric_fidelity(params)?;
    let u = best.optimal_directions[0];
    let out = ccs_from_measurement(&rho, &u)?;
    let source = match choice {
        CcsChoice::R(_) => CcsSource::BranchNotPrinted,
        CcsChoice::Measurement => CcsSource::Measurement,
    };
    Ok(SymmetricCcs { state: out.state, fidelity: out.fidelity_check, source, branch: transport.branch })
}

/// The explicit CCS family in the Bell-diagonal frame, built from the
/// eigenprojectors `P± = (I ± σ_m)/2` of the optimal axis.
fn r_family_state(t: &BdTransport, r: f64) -> TwoQubitState {
    let sigma = paulis()[t.axis - 1];
    let id = ComplexMatrix2::identity();
    let plus = (id + sigma).scale(0.5);
    let minus = (id - sigma).scale(0.5);
    let q = t.q[t.axis - 1];
    let aligned = [plus.kron(&plus), minus.kron(&minus)];
    let anti = [plus.kron(&minus), minus.kron(&plus)];
    let (wa, wb) = match t.branch {
        BdBranch::Aligned => ([1.0 + r, 1.0 - r], [1.0, 1.0]),
        _ => ([1.0, 1.0], [1.0 + r, 1.0 - r]),
    };
    let m: ComplexMatrix4 = aligned[0].scale(0.5 * q * wa[0])
        + aligned[1].scale(0.5 * q * wa[1])
        + anti[0].scale(0.5 * (1.0 - q) * wb[0])
        + anti[1].scale(0.5 * (1.0 - q) * wb[1]);
    TwoQubitState::from_matrix_unchecked(m)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClassicalCorrelation {
    pub c_bu: f64,
    pub closest_product: TwoQubitState,
}

/// `C_Bu = 2 - (√(a+|y|) + √(a-|y|) + √(b+|x|) + √(b-|x|))` with the
/// maximally mixed state as closest product state.
pub fn classical_correlation_symmetric(params: &XStateParams) -> Result<ClassicalCorrelation> {
    crate::states::symmetric_to_bd(params)?;
    let (a, b) = (params.a, params.b);
    let (ax, ay) = (params.x.norm(), params.y.norm());
    let sum: f64 = [a + ay, a - ay, b + ax, b - ax].iter().map(|p| p.max(0.0).sqrt()).sum();
    Ok(ClassicalCorrelation { c_bu: 2.0 - sum, closest_product: TwoQubitState::maximally_mixed() })
}
