use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::objective::fidelity_from_spectrum;
use super::{MeasurementDirection, Objective};
use crate::error::{Error, Result};
use crate::linalg::{fidelity, herm_eig, ComplexMatrix2, ComplexMatrix4, ZERO};
use crate::states::TwoQubitState;

/// Gap between the second and third eigenvalues of `Λ(u)` below which the
/// optimal projector is not unique.
pub const PROJECTOR_GAP_TOL: f64 = 1e-10;

/// Closest classical state built from a measurement direction.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CcsOutcome {
    pub state: TwoQubitState,
    /// `F(ρ, σ)` evaluated numerically.
    pub fidelity_check: f64,
    /// The measurement objective at `u`, which normalizes `σ`.
    pub objective: f64,
    /// Set when `λ2 = λ3`, so `σ` is one of infinitely many.
    pub degenerate_projector: bool,
}

/// Eigenvector of `u·σ` for eigenvalue `+1` (index 0) or `-1` (index 1).
fn measurement_basis(u: &MeasurementDirection) -> [[Complex64; 2]; 2] {
    let (theta, psi) = (u.theta(), u.psi());
    let (s, c) = (0.5 * theta).sin_cos();
    let phase = Complex64::from_polar(1.0, psi);
    let plus = [Complex64::new(c, 0.0), phase * s];
    let minus = [Complex64::new(-s, 0.0), phase * c];
    [plus, minus]
}

/// `(<α| ⊗ I) M (|α> ⊗ I)`.
fn contract_a(m: &ComplexMatrix4, alpha: &[Complex64; 2]) -> ComplexMatrix2 {
    ComplexMatrix2::from_fn(|j, k| {
        let mut acc = ZERO;
        for i in 0..2 {
            for l in 0..2 {
                acc += alpha[i].conj() * m.0[2 * i + j][2 * l + k] * alpha[l];
            }
        }
        acc
    })
}

/// Closest A-classical state in the eigenbasis `{|α0>, |α1>}` of `u·σ`:
/// `σ = F(u)^{-1} Σ_i |α_i><α_i| ⊗ <α_i|√ρ Π_i √ρ|α_i>`, where `Π_0` projects
/// onto the eigenvectors of the two largest eigenvalues of `Λ(u)` and
/// `Π_1 = I - Π_0`.
pub fn ccs_from_measurement(rho: &TwoQubitState, u: &MeasurementDirection) -> Result<CcsOutcome> {
    let objective = Objective::new(rho)?;
    let eig = herm_eig(&objective.lambda(u))?;
    let f_u = fidelity_from_spectrum(&eig.values);
    if f_u <= 0.0 {
        return Err(Error::InvalidParams(format!("measurement objective {f_u} is not positive")));
    }
    let mut pi0 = ComplexMatrix4::zeros();
    for k in 0..2 {
        let v = eig.vector(k);
        pi0 += ComplexMatrix4::outer(&v, &v);
    }
    let pi1 = ComplexMatrix4::identity() - pi0;
    let sqrt_rho = objective.sqrt_rho();
    let basis = measurement_basis(u);
    let mut sigma = ComplexMatrix4::zeros();
    for (alpha, pi) in basis.iter().zip([pi0, pi1]) {
        let block = contract_a(&(*sqrt_rho * pi * *sqrt_rho), alpha);
        sigma += ComplexMatrix2::outer(alpha, alpha).kron(&block);
    }
    let sigma = TwoQubitState::from_matrix_unchecked(sigma.scale(1.0 / f_u));
    let fidelity_check = fidelity(rho.matrix(), sigma.matrix())?;
    Ok(CcsOutcome {
        state: sigma,
        fidelity_check,
        objective: f_u,
        degenerate_projector: eig.values[1] - eig.values[2] < PROJECTOR_GAP_TOL,
    })
}
