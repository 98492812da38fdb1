//! Two-qubit states: validation, X-states, Bloch form, A-classical states and
//! local unitaries.

mod bell_diagonal;
mod bloch;
mod classical;
pub mod sampling;
mod xstate;

pub use bell_diagonal::{bell_diagonal_frame, symmetric_to_bd, BellDiagonalFrame, SYMMETRIC_TOL};
pub use bloch::BlochForm;
pub use classical::{classical_state, ClassicalStateParams};
pub use xstate::{x_spectrum, x_state, XSpectrum, XStateParams};

use std::ops::Deref;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    herm_eigenvalues, partial_trace_a, partial_trace_b, ComplexMatrix2, ComplexMatrix4, HERMITIAN_TOL,
    PSD_CLAMP, ZERO,
};

/// Tolerance on `|tr rho - 1|`.
pub const TRACE_TOL: f64 = 1e-9;
/// Tolerance on `max |U U^dagger - I|` for local unitaries.
pub const UNITARY_TOL: f64 = 1e-10;

/// A validated two-qubit density matrix in the basis {|00>, |01>, |10>, |11>}.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ComplexMatrix4", into = "ComplexMatrix4")]
pub struct TwoQubitState(ComplexMatrix4);

impl TwoQubitState {
    pub fn new(m: ComplexMatrix4) -> Result<Self> {
        m.ensure_hermitian(HERMITIAN_TOL)?;
        let tr = m.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidParams(format!("trace {tr} differs from 1")));
        }
        let values = herm_eigenvalues(&m)?;
        if values[3] < -PSD_CLAMP {
            return Err(Error::NotPsd { min_eigenvalue: values[3] });
        }
        Ok(Self(m.hermitian_part()))
    }

    /// Wraps a matrix that is a state by construction.
    pub(crate) fn from_matrix_unchecked(m: ComplexMatrix4) -> Self {
        Self(m.hermitian_part())
    }

    pub fn matrix(&self) -> &ComplexMatrix4 {
        &self.0
    }

    pub fn maximally_mixed() -> Self {
        Self(ComplexMatrix4::from_real_diagonal([0.25; 4]))
    }

    /// |Φ+> = (|00> + |11>)/√2.
    pub fn bell_phi_plus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = [Complex64::new(h, 0.0), ZERO, ZERO, Complex64::new(h, 0.0)];
        Self(ComplexMatrix4::outer(&v, &v))
    }

    /// `w |Φ+><Φ+| + (1 - w) I/4`.
    pub fn werner(w: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&w) {
            return Err(Error::InvalidParams(format!("Werner weight {w} outside [0, 1]")));
        }
        x_state(&XStateParams::werner(w)?)
    }

    pub fn product(a: &ComplexMatrix2, b: &ComplexMatrix2) -> Result<Self> {
        Self::new(a.kron(b))
    }

    pub fn reduced_a(&self) -> ComplexMatrix2 {
        partial_trace_b(&self.0)
    }

    pub fn reduced_b(&self) -> ComplexMatrix2 {
        partial_trace_a(&self.0)
    }

    /// Bloch vector of the reduced state on A.
    pub fn bloch_a(&self) -> [f64; 3] {
        let r = self.reduced_a();
        [2.0 * r.0[1][0].re, 2.0 * r.0[1][0].im, (r.0[0][0] - r.0[1][1]).re]
    }
}

impl Deref for TwoQubitState {
    type Target = ComplexMatrix4;
    fn deref(&self) -> &ComplexMatrix4 {
        &self.0
    }
}

impl TryFrom<ComplexMatrix4> for TwoQubitState {
    type Error = Error;
    fn try_from(m: ComplexMatrix4) -> Result<Self> {
        Self::new(m)
    }
}

impl From<TwoQubitState> for ComplexMatrix4 {
    fn from(s: TwoQubitState) -> Self {
        s.0
    }
}

/// `(U_A ⊗ U_B) rho (U_A ⊗ U_B)^dagger`.
pub fn local_unitary(rho: &TwoQubitState, ua: &ComplexMatrix2, ub: &ComplexMatrix2) -> Result<TwoQubitState> {
    ua.ensure_unitary(UNITARY_TOL)?;
    ub.ensure_unitary(UNITARY_TOL)?;
    let u = ua.kron(ub);
    Ok(TwoQubitState::from_matrix_unchecked(rho.conjugate_by(&u)))
}
