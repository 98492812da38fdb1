//! Cyclic Jacobi eigensolver for small Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `H_pq` and then applies
//! the real symmetric Jacobi rotation that annihilates it. Sweeps continue
//! until the off-diagonal Frobenius norm drops below [`OFF_DIAGONAL_TOL`].

use num_complex::Complex64;

use super::matrix::{CMatrix, ZERO};
use crate::error::{Error, Result};

/// Accepted `max |H_ij - conj(H_ji)|` on input.
pub const HERMITIAN_TOL: f64 = 1e-10;
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues sorted non-increasing; column `k` of `vectors` pairs with
/// `values[k]`.
#[derive(Debug, Clone, Copy)]
pub struct EigenDecomposition<const N: usize> {
    pub values: [f64; N],
    pub vectors: CMatrix<N>,
}

impl<const N: usize> EigenDecomposition<N> {
    pub fn vector(&self, k: usize) -> [Complex64; N] {
        let mut v = [ZERO; N];
        for (i, vi) in v.iter_mut().enumerate() {
            *vi = self.vectors.0[i][k];
        }
        v
    }

    /// V diag(f(λ)) V^dagger.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> CMatrix<N> {
        let mut out = CMatrix::<N>::zeros();
        for k in 0..N {
            let w = f(self.values[k]);
            if w == 0.0 {
                continue;
            }
            for i in 0..N {
                let vik = self.vectors.0[i][k] * w;
                for j in 0..N {
                    out.0[i][j] += vik * self.vectors.0[j][k].conj();
                }
            }
        }
        out
    }

    pub fn reconstruct(&self) -> CMatrix<N> {
        self.reconstruct_with(|x| x)
    }
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn herm_eig<const N: usize>(h: &CMatrix<N>) -> Result<EigenDecomposition<N>> {
    h.ensure_hermitian(HERMITIAN_TOL)?;
    let mut a = h.hermitian_part();
    let mut v = CMatrix::<N>::identity();
    jacobi(&mut a, Some(&mut v))?;
    let mut order: Vec<usize> = (0..N).collect();
    // Stable sort keeps the Jacobi output order for ties.
    order.sort_by(|&i, &j| a.0[j][j].re.total_cmp(&a.0[i][i].re));
    let mut values = [0.0; N];
    let mut vectors = CMatrix::<N>::zeros();
    for (col, &k) in order.iter().enumerate() {
        values[col] = a.0[k][k].re;
        for i in 0..N {
            vectors.0[i][col] = v.0[i][k];
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

/// Eigenvalues only, sorted non-increasing.
pub fn herm_eigenvalues<const N: usize>(h: &CMatrix<N>) -> Result<[f64; N]> {
    h.ensure_hermitian(HERMITIAN_TOL)?;
    let mut a = h.hermitian_part();
    jacobi(&mut a, None)?;
    let mut values = [0.0; N];
    for (i, v) in values.iter_mut().enumerate() {
        *v = a.0[i][i].re;
    }
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(values)
}

fn off_diagonal_norm<const N: usize>(a: &CMatrix<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += a.0[i][j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi<const N: usize>(a: &mut CMatrix<N>, mut v: Option<&mut CMatrix<N>>) -> Result<()> {
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(a) < OFF_DIAGONAL_TOL {
            return Ok(());
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a.0[p][q];
                let b = apq.norm();
                if b < 1e-300 {
                    continue;
                }
                let phase = apq / b;
                let app = a.0[p][p].re;
                let aqq = a.0[q][q].re;
                let zeta = (aqq - app) / (2.0 * b);
                let t = if zeta == 0.0 {
                    1.0
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // U = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] on the (p, q) plane.
                let e = phase.conj();
                // A <- A U
                for k in 0..N {
                    let akp = a.0[k][p];
                    let akq = a.0[k][q];
                    a.0[k][p] = akp * c - akq * e * s;
                    a.0[k][q] = akp * s + akq * e * c;
                }
                // A <- U^dagger A
                for k in 0..N {
                    let apk = a.0[p][k];
                    let aqk = a.0[q][k];
                    a.0[p][k] = apk * c - aqk * phase * s;
                    a.0[q][k] = apk * s + aqk * phase * c;
                }
                a.0[p][q] = ZERO;
                a.0[q][p] = ZERO;
                a.0[p][p].im = 0.0;
                a.0[q][q].im = 0.0;
                if let Some(v) = v.as_deref_mut() {
                    for k in 0..N {
                        let vkp = v.0[k][p];
                        let vkq = v.0[k][q];
                        v.0[k][p] = vkp * c - vkq * e * s;
                        v.0[k][q] = vkp * s + vkq * e * c;
                    }
                }
            }
        }
    }
    if off_diagonal_norm(a) < OFF_DIAGONAL_TOL {
        Ok(())
    } else {
        Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{pauli_z, ComplexMatrix2, ComplexMatrix4};

    #[test]
    fn identity_spectrum() {
        let e = herm_eig(&ComplexMatrix4::identity()).unwrap();
        assert_eq!(e.values, [1.0; 4]);
    }

    #[test]
    fn sigma_z_tensor_identity() {
        let h = pauli_z().kron(&ComplexMatrix2::identity());
        let e = herm_eig(&h).unwrap();
        assert_eq!(e.values, [1.0, 1.0, -1.0, -1.0]);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut h = ComplexMatrix4::identity();
        h.0[0][1] = Complex64::new(1.0, 0.0);
        assert!(matches!(herm_eig(&h), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 2 and 0.
        let h = CMatrix([
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)],
            [Complex64::new(0.0, -1.0), Complex64::new(1.0, 0.0)],
        ]);
        let e = herm_eig(&h).unwrap();
        assert!((e.values[0] - 2.0).abs() < 1e-14);
        assert!(e.values[1].abs() < 1e-14);
        assert!((e.reconstruct() - h).max_abs() < 1e-14);
    }
}
