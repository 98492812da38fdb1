use serde::{Deserialize, Serialize};

use super::search::sphere_maximize;
use super::{GridConfig, MeasurementDirection};
use crate::error::Result;
use crate::linalg::{herm_eigenvalues, shannon_bits, von_neumann_entropy, ComplexMatrix2};
use crate::states::TwoQubitState;

/// `S(ρ_A) + S(ρ_B) - S(ρ)` in bits.
pub fn mutual_information(rho: &TwoQubitState) -> Result<f64> {
    let s_a = von_neumann_entropy(&rho.reduced_a())?;
    let s_b = von_neumann_entropy(&rho.reduced_b())?;
    let s = von_neumann_entropy(rho.matrix())?;
    Ok((s_a + s_b - s).max(0.0))
}

/// Average entropy of B after measuring A along `u`.
pub fn conditional_entropy(rho: &TwoQubitState, u: &MeasurementDirection) -> Result<f64> {
    let id = ComplexMatrix2::identity();
    let mut total = 0.0;
    for proj in u.projectors() {
        let branch = (proj.kron(&id) * *rho.matrix() * proj.kron(&id)).hermitian_part();
        let p = branch.trace().re;
        if p <= 0.0 {
            continue;
        }
        // Spectrum of the unnormalized branch is p times that of ρ_{B|i}.
        let values = herm_eigenvalues(&branch)?;
        total += shannon_bits(values.iter().map(|v| v.max(0.0))) + p * p.log2();
    }
    Ok(total.max(0.0))
}

/// Entropic correlations split by a projective measurement on A.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropicDiscord {
    pub classical_corr: f64,
    pub discord: f64,
    pub direction: MeasurementDirection,
}

/// Classical correlation `S(ρ_B) - min_u Σ p_i S(ρ_{B|i})` and the remaining
/// discord `I(ρ) - J(ρ)`, both in bits.
pub fn entropic_discord(rho: &TwoQubitState, grid: &GridConfig) -> Result<EntropicDiscord> {
    let f = |u: &MeasurementDirection| conditional_entropy(rho, u).map(|h| -h);
    let best = sphere_maximize(&f, grid)?;
    let s_b = von_neumann_entropy(&rho.reduced_b())?;
    let classical_corr = s_b + best.value;
    let discord = mutual_information(rho)? - classical_corr;
    Ok(EntropicDiscord { classical_corr, discord, direction: best.candidates[0].0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix4;

    #[test]
    fn mutual_information_examples() {
        let product = TwoQubitState::product(
            &ComplexMatrix2::from_real_diagonal([0.7, 0.3]),
            &ComplexMatrix2::from_real_diagonal([0.2, 0.8]),
        )
        .unwrap();
        assert!(mutual_information(&product).unwrap().abs() < 1e-12);
        assert!((mutual_information(&TwoQubitState::bell_phi_plus()).unwrap() - 2.0).abs() < 1e-12);
        let cc = TwoQubitState::new(ComplexMatrix4::from_real_diagonal([0.5, 0.0, 0.0, 0.5])).unwrap();
        assert!((mutual_information(&cc).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bell_state_splits_evenly() {
        let r = entropic_discord(&TwoQubitState::bell_phi_plus(), &GridConfig::default()).unwrap();
        assert!((r.classical_corr - 1.0).abs() < 1e-9);
        assert!((r.discord - 1.0).abs() < 1e-9);
    }

    #[test]
    fn classically_correlated_has_no_entropic_discord() {
        let cc = TwoQubitState::new(ComplexMatrix4::from_real_diagonal([0.5, 0.0, 0.0, 0.5])).unwrap();
        let r = entropic_discord(&cc, &GridConfig::default()).unwrap();
        assert!(r.discord.abs() < 1e-6);
        assert!((r.classical_corr - 1.0).abs() < 1e-6);
    }
}
