use serde::{Deserialize, Serialize};

use super::{MeasurementDirection, Objective};
use crate::error::{Error, Result};
use crate::linalg::{herm_eigenvalues, ComplexMatrix2};
use crate::states::TwoQubitState;

/// Priors below this are treated as outcomes that never occur.
pub const PRIOR_CUTOFF: f64 = 1e-12;
const PRIOR_SUM_TOL: f64 = 1e-10;

/// Two states with prior probabilities, to be told apart by one measurement.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QsdEnsemble {
    pub priors: [f64; 2],
    pub states: [TwoQubitState; 2],
}

impl QsdEnsemble {
    pub fn new(priors: [f64; 2], states: [TwoQubitState; 2]) -> Result<Self> {
        if priors.iter().any(|&p| !(p >= 0.0)) || (priors[0] + priors[1] - 1.0).abs() > PRIOR_SUM_TOL {
            return Err(Error::InvalidParams(format!("priors {priors:?} are not a distribution")));
        }
        Ok(Self { priors, states })
    }
}

/// Optimal two-outcome discrimination success `½(1 - tr Λ) + Σ_{λ>0} λ` with
/// `Λ = λ0 ρ0 - λ1 ρ1`.
pub fn helstrom_success(e: &QsdEnsemble) -> Result<f64> {
    let lambda = e.states[0].scale(e.priors[0]) - e.states[1].scale(e.priors[1]);
    let values = herm_eigenvalues(&lambda.hermitian_part())?;
    let positive: f64 = values.iter().filter(|&&v| v > 0.0).sum();
    Ok(0.5 * (1.0 - lambda.trace().re) + positive)
}

/// Ensemble `λ_i = tr(P_i ρ)`, `ρ_i = √ρ P_i √ρ / λ_i` induced by measuring A
/// along `u`, where `P_i = |α_i><α_i| ⊗ I`.
pub fn induced_ensemble(rho: &TwoQubitState, u: &MeasurementDirection) -> Result<QsdEnsemble> {
    let objective = Objective::new(rho)?;
    let sqrt_rho = objective.sqrt_rho();
    let id = ComplexMatrix2::identity();
    let mut priors = [0.0; 2];
    let mut states: [Option<TwoQubitState>; 2] = [None, None];
    for (i, proj) in u.projectors().iter().enumerate() {
        let branch = *sqrt_rho * proj.kron(&id) * *sqrt_rho;
        let p = branch.trace().re;
        if p >= PRIOR_CUTOFF {
            priors[i] = p;
            states[i] = Some(TwoQubitState::from_matrix_unchecked(branch.scale(1.0 / p)));
        }
    }
    let total = priors[0] + priors[1];
    priors = priors.map(|p| p / total);
    let states = match states {
        [Some(a), Some(b)] => [a, b],
        [Some(a), None] => [a, a],
        [None, Some(b)] => [b, b],
        [None, None] => return Err(Error::InvalidParams("both measurement outcomes have zero probability".into())),
    };
    QsdEnsemble::new(priors, states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discord::fidelity_at_direction;
    use crate::linalg::{trace_norm, ComplexMatrix4};

    #[test]
    fn identical_states_give_larger_prior() {
        let s = TwoQubitState::werner(0.3).unwrap();
        let e = QsdEnsemble::new([0.3, 0.7], [s, s]).unwrap();
        assert!((helstrom_success(&e).unwrap() - 0.7).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_pure_states_are_perfectly_distinguished() {
        let a = TwoQubitState::new(ComplexMatrix4::from_real_diagonal([1.0, 0.0, 0.0, 0.0])).unwrap();
        let b = TwoQubitState::new(ComplexMatrix4::from_real_diagonal([0.0, 0.0, 0.0, 1.0])).unwrap();
        let e = QsdEnsemble::new([0.5, 0.5], [a, b]).unwrap();
        assert!((helstrom_success(&e).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equal_priors_match_trace_norm() {
        let a = TwoQubitState::werner(0.7).unwrap();
        let b = TwoQubitState::maximally_mixed();
        let e = QsdEnsemble::new([0.5, 0.5], [a, b]).unwrap();
        let tn = trace_norm(&(a.scale(0.5) - b.scale(0.5))).unwrap();
        assert!((helstrom_success(&e).unwrap() - 0.5 * (1.0 + tn)).abs() < 1e-12);
    }

    #[test]
    fn bridge_at_fixed_direction() {
        for rho in [TwoQubitState::maximally_mixed(), TwoQubitState::bell_phi_plus(), TwoQubitState::werner(0.4).unwrap()] {
            let u = MeasurementDirection::from_angles(0.7, 1.3);
            let e = induced_ensemble(&rho, &u).unwrap();
            let f = fidelity_at_direction(&rho, &u).unwrap();
            assert!((helstrom_success(&e).unwrap() - f).abs() < 1e-10);
        }
    }

    #[test]
    fn vanishing_outcome_is_dropped() {
        let rho = TwoQubitState::new(ComplexMatrix4::from_real_diagonal([0.5, 0.5, 0.0, 0.0])).unwrap();
        let e = induced_ensemble(&rho, &MeasurementDirection::z()).unwrap();
        assert_eq!(e.priors, [1.0, 0.0]);
        assert!((helstrom_success(&e).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_priors() {
        let s = TwoQubitState::maximally_mixed();
        assert!(QsdEnsemble::new([0.6, 0.6], [s, s]).is_err());
    }
}
