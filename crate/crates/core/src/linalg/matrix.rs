use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dense N×N complex matrix stored row-major on the stack.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CMatrix<const N: usize>(
    #[serde(with = "serde_rows")] pub [[Complex64; N]; N],
);

pub type ComplexMatrix2 = CMatrix<2>;
pub type ComplexMatrix4 = CMatrix<4>;

impl<const N: usize> CMatrix<N> {
    pub fn zeros() -> Self {
        Self([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_real_diagonal(d: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.0[i][i] = Complex64::new(d[i], 0.0);
        }
        m
    }

    /// Outer product |v><w|.
    pub fn outer(v: &[Complex64; N], w: &[Complex64; N]) -> Self {
        Self::from_fn(|i, j| v[i] * w[j].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn mul_vec(&self, v: &[Complex64; N]) -> [Complex64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// max_ij |H_ij - conj(H_ji)|.
    pub fn hermiticity_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..N {
            for j in i..N {
                dev = dev.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        dev
    }

    /// Average with the adjoint; removes round-off anti-Hermitian parts.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(|i, j| 0.5 * (self.0[i][j] + self.0[j][i].conj()))
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn ensure_hermitian(&self, tol: f64) -> Result<()> {
        let deviation = self.hermiticity_deviation();
        if !self.is_finite() || deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(())
    }

    pub fn unitarity_deviation(&self) -> f64 {
        (*self * self.adjoint() - Self::identity()).max_abs()
    }

    pub fn ensure_unitary(&self, tol: f64) -> Result<()> {
        let deviation = self.unitarity_deviation();
        if !self.is_finite() || deviation > tol {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(())
    }

    /// Real-part trace of `self * other` without forming the product.
    pub fn trace_product_re(&self, other: &Self) -> f64 {
        let mut acc = 0.0;
        for i in 0..N {
            for k in 0..N {
                acc += (self.0[i][k] * other.0[k][i]).re;
            }
        }
        acc
    }

    /// Unitary conjugation U M U^dagger.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        *u * *self * u.adjoint()
    }
}

impl CMatrix<2> {
    /// Kronecker product self ⊗ other.
    pub fn kron(&self, other: &CMatrix<2>) -> CMatrix<4> {
        CMatrix::<4>::from_fn(|i, j| self.0[i / 2][j / 2] * other.0[i % 2][j % 2])
    }
}

impl<const N: usize> Default for CMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> std::fmt::Debug for CMatrix<N> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for row in &self.0 {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> AddAssign for CMatrix<N> {
    fn add_assign(&mut self, rhs: Self) {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += rhs.0[i][j];
            }
        }
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<const N: usize> Neg for CMatrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

pub fn pauli_x() -> ComplexMatrix2 {
    CMatrix([[ZERO, ONE], [ONE, ZERO]])
}

pub fn pauli_y() -> ComplexMatrix2 {
    CMatrix([[ZERO, -I], [I, ZERO]])
}

pub fn pauli_z() -> ComplexMatrix2 {
    CMatrix([[ONE, ZERO], [ZERO, -ONE]])
}

/// (σ1, σ2, σ3).
pub fn paulis() -> [ComplexMatrix2; 3] {
    [pauli_x(), pauli_y(), pauli_z()]
}

/// `I/2 + (v · σ)/2`, the qubit operator with Bloch vector `v`.
pub fn bloch_operator(v: [f64; 3]) -> ComplexMatrix2 {
    let [x, y, z] = v;
    CMatrix([
        [Complex64::new(0.5 * (1.0 + z), 0.0), Complex64::new(0.5 * x, -0.5 * y)],
        [Complex64::new(0.5 * x, 0.5 * y), Complex64::new(0.5 * (1.0 - z), 0.0)],
    ])
}

mod serde_rows {
    use num_complex::Complex64;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(
        m: &[[Complex64; N]; N],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Complex64>> = m.iter().map(|r| r.to_vec()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<[[Complex64; N]; N], D::Error> {
        let rows: Vec<Vec<Complex64>> = Vec::deserialize(d)?;
        if rows.len() != N || rows.iter().any(|r| r.len() != N) {
            return Err(D::Error::custom(format!("expected a {N}x{N} matrix")));
        }
        let mut out = [[Complex64::new(0.0, 0.0); N]; N];
        for (i, r) in rows.into_iter().enumerate() {
            for (j, z) in r.into_iter().enumerate() {
                out[i][j] = z;
            }
        }
        Ok(out)
    }
}
