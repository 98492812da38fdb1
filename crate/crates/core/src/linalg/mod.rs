//! Dense complex linear algebra for 2×2 and 4×4 operators.

mod eigen;
mod matrix;

pub use eigen::{herm_eig, herm_eigenvalues, EigenDecomposition, HERMITIAN_TOL, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use matrix::{
    bloch_operator, pauli_x, pauli_y, pauli_z, paulis, CMatrix, ComplexMatrix2, ComplexMatrix4, I,
    ONE, ZERO,
};

use crate::error::{Error, Result};

/// Eigenvalues in `[-PSD_CLAMP, 0)` are treated as round-off and set to zero.
pub const PSD_CLAMP: f64 = 1e-10;

/// Eigenvalues below `ROOT_FLOOR · ε · λ_max` are rounded to zero before a
/// square root is taken.
pub const ROOT_FLOOR: f64 = 64.0;

fn root(x: f64, scale: f64) -> f64 {
    if x > ROOT_FLOOR * f64::EPSILON * scale {
        x.sqrt()
    } else {
        0.0
    }
}

fn spectral_scale(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |m: f64, v| m.max(v.abs()))
}

fn check_psd(values: &[f64]) -> Result<()> {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -PSD_CLAMP {
        return Err(Error::NotPsd { min_eigenvalue: min });
    }
    Ok(())
}

/// Principal square root of a positive semidefinite Hermitian matrix.
pub fn psd_sqrt<const N: usize>(rho: &CMatrix<N>) -> Result<CMatrix<N>> {
    let eig = herm_eig(rho)?;
    check_psd(&eig.values)?;
    let scale = spectral_scale(&eig.values);
    Ok(eig.reconstruct_with(|x| root(x, scale)).hermitian_part())
}

/// Uhlmann fidelity `[tr sqrt(sqrt(rho) sigma sqrt(rho))]^2`.
pub fn fidelity(rho: &ComplexMatrix4, sigma: &ComplexMatrix4) -> Result<f64> {
    let sqrt_rho = psd_sqrt(rho)?;
    check_psd(&herm_eigenvalues(sigma)?)?;
    let inner = (sqrt_rho * *sigma * sqrt_rho).hermitian_part();
    let values = herm_eigenvalues(&inner)?;
    let scale = spectral_scale(&values);
    let sum: f64 = values.iter().map(|&x| root(x, scale)).sum();
    Ok((sum * sum).min(1.0))
}

/// Squared Bures distance `2 (1 - sqrt F)`.
pub fn bures_distance_sq(rho: &ComplexMatrix4, sigma: &ComplexMatrix4) -> Result<f64> {
    let f = fidelity(rho, sigma)?;
    Ok((2.0 * (1.0 - f.sqrt())).max(0.0))
}

/// Sum of absolute eigenvalues of a Hermitian matrix.
pub fn trace_norm<const N: usize>(m: &CMatrix<N>) -> Result<f64> {
    Ok(herm_eigenvalues(m)?.iter().map(|x| x.abs()).sum())
}

/// Reduced state of the first qubit, `tr_B rho`.
pub fn partial_trace_b(rho: &ComplexMatrix4) -> ComplexMatrix2 {
    CMatrix::<2>::from_fn(|i, j| rho.0[2 * i][2 * j] + rho.0[2 * i + 1][2 * j + 1])
}

/// Reduced state of the second qubit, `tr_A rho`.
pub fn partial_trace_a(rho: &ComplexMatrix4) -> ComplexMatrix2 {
    CMatrix::<2>::from_fn(|i, j| rho.0[i][j] + rho.0[i + 2][j + 2])
}

/// `-tr(rho log2 rho)` with `0 log 0 = 0`.
pub fn von_neumann_entropy<const N: usize>(rho: &CMatrix<N>) -> Result<f64> {
    let values = herm_eigenvalues(rho)?;
    check_psd(&values)?;
    Ok(shannon_bits(values.iter().copied()))
}

pub(crate) fn shannon_bits(p: impl IntoIterator<Item = f64>) -> f64 {
    p.into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * x.log2())
        .sum::<f64>()
        .max(0.0)
}
