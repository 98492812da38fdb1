use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;
use serde::Serialize;

use super::{local_unitary, TwoQubitState, XStateParams};
use crate::error::{Error, Result};
use crate::linalg::{pauli_y, ComplexMatrix2, ZERO};

/// Tolerance for membership in the a = d, b = c family.
pub const SYMMETRIC_TOL: f64 = 1e-12;

/// Bell-diagonal representative of a symmetric X-state and the local
/// unitaries reaching it: `rho' = (U_A⊗U_B) rho (U_A⊗U_B)^dagger`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BellDiagonalFrame {
    pub c_prime: [f64; 3],
    pub u_a: ComplexMatrix2,
    pub u_b: ComplexMatrix2,
}

impl BellDiagonalFrame {
    /// Bell-basis weights (p'_0, p'_1, p'_2, p'_3).
    pub fn weights(&self) -> [f64; 4] {
        let [c1, c2, c3] = self.c_prime;
        let sum = c1 + c2 + c3;
        [
            0.25 * (1.0 - sum),
            0.25 * (1.0 + sum - 2.0 * c1),
            0.25 * (1.0 + sum - 2.0 * c2),
            0.25 * (1.0 + sum - 2.0 * c3),
        ]
    }

    pub fn to_frame(&self, rho: &TwoQubitState) -> Result<TwoQubitState> {
        local_unitary(rho, &self.u_a, &self.u_b)
    }

    pub fn from_frame(&self, rho: &TwoQubitState) -> Result<TwoQubitState> {
        local_unitary(rho, &self.u_a.adjoint(), &self.u_b.adjoint())
    }
}

pub(crate) fn ensure_symmetric(params: &XStateParams) -> Result<()> {
    if params.is_symmetric(SYMMETRIC_TOL) {
        Ok(())
    } else {
        Err(Error::NotSymmetricFamily {
            a_minus_d: (params.a - params.d).abs(),
            b_minus_c: (params.b - params.c).abs(),
        })
    }
}

/// Correlation triple `(c'_1, c'_2, c'_3)` of the locally equivalent
/// Bell-diagonal state: `(2||x|-|y||, 2(|x|+|y|), ±2(a-b))`, with the sign of
/// the third entry flipped when `|x| < |y|` so that the triple stays reachable
/// by local unitaries.
pub fn symmetric_to_bd(params: &XStateParams) -> Result<[f64; 3]> {
    params.validate()?;
    ensure_symmetric(params)?;
    let (ax, ay) = (params.x.norm(), params.y.norm());
    let c3 = if ax >= ay { 2.0 * (params.a - params.b) } else { 2.0 * (params.b - params.a) };
    Ok([2.0 * (ax - ay).abs(), 2.0 * (ax + ay), c3])
}

fn z_rotation(angle: f64) -> ComplexMatrix2 {
    let mut u = ComplexMatrix2::zeros();
    u.0[0][0] = Complex64::from_polar(1.0, -0.5 * angle);
    u.0[1][1] = Complex64::from_polar(1.0, 0.5 * angle);
    u.0[0][1] = ZERO;
    u
}

pub fn bell_diagonal_frame(params: &XStateParams) -> Result<BellDiagonalFrame> {
    let c_prime = symmetric_to_bd(params)?;
    let eta = if params.x.norm() > 0.0 { params.x.arg() } else { 0.0 };
    let xi = if params.y.norm() > 0.0 { params.y.arg() } else { 0.0 };
    // Phase rotations make x and y real and non-negative.
    let mut u_a = z_rotation(0.5 * (xi + eta));
    let mut u_b = z_rotation(0.5 * (xi - eta));
    // A π/2 rotation about z on both qubits swaps the σ1σ1 and σ2σ2 weights.
    let quarter = z_rotation(2.0 * FRAC_PI_4);
    u_a = quarter * u_a;
    u_b = quarter * u_b;
    if params.x.norm() < params.y.norm() {
        // π rotation about y on A flips the signs of c'_1 and c'_3.
        u_a = pauli_y() * u_a;
    }
    Ok(BellDiagonalFrame { c_prime, u_a, u_b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{x_spectrum, x_state, BlochForm};

    fn assert_triple(got: [f64; 3], want: [f64; 3]) {
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-14, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn maximally_mixed_maps_to_origin() {
        let p = XStateParams::symmetric(0.25, 0.25, ZERO, ZERO).unwrap();
        assert_triple(symmetric_to_bd(&p).unwrap(), [0.0; 3]);
    }

    #[test]
    fn werner_half() {
        let p = XStateParams::werner(0.5).unwrap();
        assert_triple(symmetric_to_bd(&p).unwrap(), [0.5, 0.5, -0.5]);
    }

    #[test]
    fn larger_x_coherence() {
        let p = XStateParams::symmetric(0.3, 0.2, Complex64::new(0.1, 0.0), Complex64::new(0.05, 0.0)).unwrap();
        assert_triple(symmetric_to_bd(&p).unwrap(), [0.1, 0.3, 0.2]);
    }

    #[test]
    fn rejects_asymmetric_state() {
        let p = XStateParams::new(0.4, 0.3, 0.2, 0.1, ZERO, ZERO).unwrap();
        assert!(matches!(symmetric_to_bd(&p), Err(Error::NotSymmetricFamily { .. })));
    }

    #[test]
    fn weights_match_spectrum_and_frame_reaches_bell_diagonal() {
        let cases = [
            (0.3, 0.2, Complex64::from_polar(0.1, 0.4), Complex64::from_polar(0.05, 2.0)),
            (0.35, 0.15, Complex64::from_polar(0.05, -1.0), Complex64::from_polar(0.3, 0.3)),
            (0.375, 0.125, ZERO, Complex64::new(0.25, 0.0)),
        ];
        for (a, b, x, y) in cases {
            let p = XStateParams::symmetric(a, b, x, y).unwrap();
            let frame = bell_diagonal_frame(&p).unwrap();
            let mut w = frame.weights();
            let mut s = x_spectrum(&p).unwrap().values;
            w.sort_by(f64::total_cmp);
            s.sort_by(f64::total_cmp);
            for (g, e) in w.iter().zip(s) {
                assert!((g - e).abs() < 1e-14);
            }
            let bd = frame.to_frame(&x_state(&p).unwrap()).unwrap();
            let form = BlochForm::from_state(&bd);
            let mut want = [[0.0; 3]; 3];
            for i in 0..3 {
                want[i][i] = frame.c_prime[i];
            }
            for i in 0..3 {
                assert!(form.c_a[i].abs() < 1e-14 && form.c_b[i].abs() < 1e-14);
                for j in 0..3 {
                    assert!((form.t[i][j] - want[i][j]).abs() < 1e-14, "{:?}", form.t);
                }
            }
        }
    }
}
