use serde::{Deserialize, Serialize};

use super::TwoQubitState;
use crate::error::{Error, Result};
use crate::linalg::bloch_operator;

const NORM_TOL: f64 = 1e-10;

/// `p |α0><α0| ⊗ ρ0 + (1-p) |α1><α1| ⊗ ρ1` with `|α0(1)><α0(1)| = (I ± r·σ)/2`,
/// `ρ0 = (I + s·σ)/2` and `ρ1 = (I + t·σ)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalStateParams {
    pub p: f64,
    pub r: [f64; 3],
    pub s: [f64; 3],
    pub t: [f64; 3],
}

fn norm(v: &[f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

impl ClassicalStateParams {
    pub fn new(p: f64, r: [f64; 3], s: [f64; 3], t: [f64; 3]) -> Result<Self> {
        let out = Self { p, r, s, t };
        out.validate()?;
        Ok(out)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=0.5).contains(&self.p) {
            return Err(Error::InvalidParams(format!("p = {} outside [0, 1/2]", self.p)));
        }
        if (norm(&self.r) - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidParams(format!("|r| = {} is not 1", norm(&self.r))));
        }
        if norm(&self.s) > 1.0 + NORM_TOL {
            return Err(Error::InvalidParams(format!("|s| = {} exceeds 1", norm(&self.s))));
        }
        if norm(&self.t) > 1.0 + NORM_TOL {
            return Err(Error::InvalidParams(format!("|t| = {} exceeds 1", norm(&self.t))));
        }
        Ok(())
    }

    /// Bloch coefficients (c_i0, c_0j, c_mn) of the assembled state.
    pub fn bloch_coefficients(&self) -> ([f64; 3], [f64; 3], [[f64; 3]; 3]) {
        let Self { p, r, s, t } = *self;
        let c_a = r.map(|ri| (2.0 * p - 1.0) * ri);
        let c_b = std::array::from_fn(|j| p * s[j] + (1.0 - p) * t[j]);
        let c = std::array::from_fn(|m| std::array::from_fn(|n| r[m] * (p * s[n] - (1.0 - p) * t[n])));
        (c_a, c_b, c)
    }
}

pub fn classical_state(params: &ClassicalStateParams) -> Result<TwoQubitState> {
    params.validate()?;
    let ClassicalStateParams { p, r, s, t } = *params;
    let alpha0 = bloch_operator(r);
    let alpha1 = bloch_operator(r.map(|v| -v));
    let m = alpha0.kron(&bloch_operator(s)).scale(p) + alpha1.kron(&bloch_operator(t)).scale(1.0 - p);
    Ok(TwoQubitState::from_matrix_unchecked(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix4;
    use crate::states::BlochForm;

    #[test]
    fn uniform_mixture_is_maximally_mixed() {
        let p = ClassicalStateParams::new(0.5, [0.0, 0.0, 1.0], [0.0; 3], [0.0; 3]).unwrap();
        let rho = classical_state(&p).unwrap();
        assert!((*rho - *TwoQubitState::maximally_mixed()).max_abs() < 1e-15);
    }

    #[test]
    fn classically_correlated_diagonal() {
        let p = ClassicalStateParams::new(0.5, [0.0, 0.0, 1.0], [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]).unwrap();
        let rho = classical_state(&p).unwrap();
        let want = ComplexMatrix4::from_real_diagonal([0.5, 0.0, 0.0, 0.5]);
        assert!((*rho - want).max_abs() < 1e-15);
    }

    #[test]
    fn coefficient_identities() {
        let p = ClassicalStateParams::new(0.3, [0.6, 0.0, 0.8], [0.1, -0.5, 0.2], [0.0, 0.3, -0.9]).unwrap();
        let b = BlochForm::from_state(&classical_state(&p).unwrap());
        let (c_a, c_b, c) = p.bloch_coefficients();
        for i in 0..3 {
            assert!((b.c_a[i] - c_a[i]).abs() < 1e-14);
            assert!((b.c_b[i] - c_b[i]).abs() < 1e-14);
            for j in 0..3 {
                assert!((b.t[i][j] - c[i][j]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn validation() {
        assert!(ClassicalStateParams::new(0.6, [0.0, 0.0, 1.0], [0.0; 3], [0.0; 3]).is_err());
        assert!(ClassicalStateParams::new(0.2, [0.0, 0.5, 0.5], [0.0; 3], [0.0; 3]).is_err());
        assert!(ClassicalStateParams::new(0.2, [0.0, 0.0, 1.0], [1.0, 1.0, 0.0], [0.0; 3]).is_err());
    }
}
