use super::MeasurementDirection;
use crate::error::Result;
use crate::linalg::{herm_eigenvalues, paulis, psd_sqrt, ComplexMatrix2, ComplexMatrix4};
use crate::states::TwoQubitState;

/// `√ρ (σ_u ⊗ I) √ρ`.
pub fn lambda_matrix(rho: &TwoQubitState, u: &MeasurementDirection) -> Result<ComplexMatrix4> {
    Ok(Objective::new(rho)?.lambda(u))
}

/// `½(1 - tr Λ(u) + 2(λ1 + λ2))` with `λ1 ≥ λ2` the two largest eigenvalues of
/// `Λ(u)`: the fidelity between `ρ` and the closest state that is classical in
/// the eigenbasis of `u·σ`.
pub fn fidelity_at_direction(rho: &TwoQubitState, u: &MeasurementDirection) -> Result<f64> {
    Objective::new(rho)?.fidelity(u)
}

/// Evaluates the measurement objective for one state at many directions,
/// reusing `√ρ` and the three operators `L_m = √ρ (σ_m ⊗ I) √ρ`.
#[derive(Debug, Clone)]
pub struct Objective {
    sqrt_rho: ComplexMatrix4,
    basis: [ComplexMatrix4; 3],
}

impl Objective {
    pub fn new(rho: &TwoQubitState) -> Result<Self> {
        let sqrt_rho = psd_sqrt(rho.matrix())?;
        let id = ComplexMatrix2::identity();
        let basis = paulis().map(|s| (sqrt_rho * s.kron(&id) * sqrt_rho).hermitian_part());
        Ok(Self { sqrt_rho, basis })
    }

    pub fn sqrt_rho(&self) -> &ComplexMatrix4 {
        &self.sqrt_rho
    }

    pub fn lambda(&self, u: &MeasurementDirection) -> ComplexMatrix4 {
        let v = u.vector();
        self.basis[0].scale(v[0]) + self.basis[1].scale(v[1]) + self.basis[2].scale(v[2])
    }

    pub fn fidelity(&self, u: &MeasurementDirection) -> Result<f64> {
        let values = herm_eigenvalues(&self.lambda(u))?;
        Ok(fidelity_from_spectrum(&values))
    }

    pub fn fidelity_at_angles(&self, theta: f64, psi: f64) -> Result<f64> {
        self.fidelity(&MeasurementDirection::from_angles(theta, psi))
    }
}

/// `½(1 - Σλ + 2(λ1 + λ2))` for a non-increasing spectrum.
pub(crate) fn fidelity_from_spectrum(values: &[f64; 4]) -> f64 {
    let trace: f64 = values.iter().sum();
    0.5 * (1.0 - trace + 2.0 * (values[0] + values[1]))
}
