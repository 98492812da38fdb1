use serde::{Deserialize, Serialize};

use super::TwoQubitState;
use crate::error::Result;
use crate::linalg::{paulis, ComplexMatrix2, ComplexMatrix4};

/// Pauli expansion
/// `rho = (I⊗I + Σ c_A[i] σ_i⊗I + Σ c_B[j] I⊗σ_j + Σ T[m][n] σ_m⊗σ_n) / 4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochForm {
    pub c_a: [f64; 3],
    pub c_b: [f64; 3],
    pub t: [[f64; 3]; 3],
}

impl BlochForm {
    pub fn from_state(rho: &TwoQubitState) -> Self {
        Self::from_matrix(rho.matrix())
    }

    pub fn from_matrix(rho: &ComplexMatrix4) -> Self {
        let s = paulis();
        let id = ComplexMatrix2::identity();
        let mut c_a = [0.0; 3];
        let mut c_b = [0.0; 3];
        let mut t = [[0.0; 3]; 3];
        for i in 0..3 {
            c_a[i] = rho.trace_product_re(&s[i].kron(&id));
            c_b[i] = rho.trace_product_re(&id.kron(&s[i]));
            for j in 0..3 {
                t[i][j] = rho.trace_product_re(&s[i].kron(&s[j]));
            }
        }
        Self { c_a, c_b, t }
    }

    pub fn to_matrix(&self) -> ComplexMatrix4 {
        let s = paulis();
        let id = ComplexMatrix2::identity();
        let mut m = ComplexMatrix4::identity();
        for i in 0..3 {
            m += s[i].kron(&id).scale(self.c_a[i]);
            m += id.kron(&s[i]).scale(self.c_b[i]);
            for j in 0..3 {
                m += s[i].kron(&s[j]).scale(self.t[i][j]);
            }
        }
        m.scale(0.25)
    }

    pub fn to_state(&self) -> Result<TwoQubitState> {
        TwoQubitState::new(self.to_matrix())
    }

    /// (c10, c20, c30, c01, c02, c03, c11, c12, c13, c21, ..., c33).
    pub fn as_vector(&self) -> [f64; 15] {
        let mut v = [0.0; 15];
        v[..3].copy_from_slice(&self.c_a);
        v[3..6].copy_from_slice(&self.c_b);
        for m in 0..3 {
            v[6 + 3 * m..9 + 3 * m].copy_from_slice(&self.t[m]);
        }
        v
    }
}
