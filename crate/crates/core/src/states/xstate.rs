use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::TwoQubitState;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix4, ZERO};

/// Probability-sum tolerance for X-state diagonals.
pub const SUM_TOL: f64 = 1e-9;
/// Slack on the positivity constraints |x|² ≤ bc, |y|² ≤ ad.
pub const POSITIVITY_SLACK: f64 = 1e-12;

/// The seven-parameter X-state
///
/// ```text
/// ⎡ a  0  0  y ⎤
/// ⎢ 0  b  x  0 ⎥
/// ⎢ 0  x̄  c  0 ⎥
/// ⎣ ȳ  0  0  d ⎦
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XStateParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub x: Complex64,
    pub y: Complex64,
}

impl XStateParams {
    pub fn new(a: f64, b: f64, c: f64, d: f64, x: Complex64, y: Complex64) -> Result<Self> {
        let p = Self { a, b, c, d, x, y };
        p.validate()?;
        Ok(p)
    }

    /// Symmetric-family member (a = d, b = c).
    pub fn symmetric(a: f64, b: f64, x: Complex64, y: Complex64) -> Result<Self> {
        Self::new(a, b, b, a, x, y)
    }

    pub fn werner(w: f64) -> Result<Self> {
        let a = 0.25 * (1.0 + w);
        let b = 0.25 * (1.0 - w);
        Self::symmetric(a, b, ZERO, Complex64::new(0.5 * w, 0.0))
    }

    pub fn validate(&self) -> Result<()> {
        let Self { a, b, c, d, x, y } = *self;
        let all = [a, b, c, d, x.re, x.im, y.re, y.im];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams("non-finite X-state parameter".into()));
        }
        if [a, b, c, d].iter().any(|&v| v < 0.0) {
            return Err(Error::InvalidParams(format!(
                "diagonal entries must be non-negative (a={a}, b={b}, c={c}, d={d})"
            )));
        }
        let sum = a + b + c + d;
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::InvalidParams(format!("a+b+c+d = {sum} differs from 1")));
        }
        if x.norm_sqr() > b * c + POSITIVITY_SLACK {
            return Err(Error::InvalidParams(format!(
                "|x|^2 = {} exceeds bc = {}",
                x.norm_sqr(),
                b * c
            )));
        }
        if y.norm_sqr() > a * d + POSITIVITY_SLACK {
            return Err(Error::InvalidParams(format!(
                "|y|^2 = {} exceeds ad = {}",
                y.norm_sqr(),
                a * d
            )));
        }
        Ok(())
    }

    /// Reads the X-state parameters back from a matrix, or `None` if any
    /// entry outside the X pattern exceeds `tol`.
    pub fn from_state(rho: &TwoQubitState, tol: f64) -> Option<Self> {
        let m = rho.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let on_pattern = i == j || i + j == 3;
                if !on_pattern && m.0[i][j].norm() > tol {
                    return None;
                }
            }
        }
        Self::new(m.0[0][0].re, m.0[1][1].re, m.0[2][2].re, m.0[3][3].re, m.0[1][2], m.0[0][3]).ok()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        (self.a - self.d).abs() <= tol && (self.b - self.c).abs() <= tol
    }

    /// det rho_X = (ad - |y|²)(bc - |x|²).
    pub fn det(&self) -> f64 {
        self.ad_gap() * self.bc_gap()
    }

    /// ad - |y|².
    pub fn ad_gap(&self) -> f64 {
        self.a * self.d - self.y.norm_sqr()
    }

    /// bc - |x|².
    pub fn bc_gap(&self) -> f64 {
        self.b * self.c - self.x.norm_sqr()
    }

    /// |xy|.
    pub fn abs_xy(&self) -> f64 {
        self.x.norm() * self.y.norm()
    }

    /// φ = arg(xy) in [0, 2π), with arg(0) := 0.
    pub fn phase_xy(&self) -> f64 {
        let xy = self.x * self.y;
        if xy.norm() == 0.0 {
            0.0
        } else {
            xy.arg().rem_euclid(TAU)
        }
    }
}

/// Assembles the X-state matrix.
pub fn x_state(params: &XStateParams) -> Result<TwoQubitState> {
    params.validate()?;
    let XStateParams { a, b, c, d, x, y } = *params;
    let mut m = ComplexMatrix4::from_real_diagonal([a, b, c, d]);
    m.0[0][3] = y;
    m.0[3][0] = y.conj();
    m.0[1][2] = x;
    m.0[2][1] = x.conj();
    Ok(TwoQubitState::from_matrix_unchecked(m))
}

/// Closed-form spectrum of an X-state.
///
/// `values` = (p1, p2, p3, p4) with p1 ≤ p2 from the {|01>,|10>} block and
/// p3 ≤ p4 from the {|00>,|11>} block; `vectors[k]` is the normalized
/// eigenvector of `values[k]`.
#[derive(Debug, Clone, Copy)]
pub struct XSpectrum {
    pub values: [f64; 4],
    pub vectors: [[Complex64; 4]; 4],
}

pub fn x_spectrum(params: &XStateParams) -> Result<XSpectrum> {
    params.validate()?;
    let XStateParams { a, b, c, d, x, y } = *params;
    let (p1, p2, v1, v2) = block_eigen(b, c, x);
    let (p3, p4, v3, v4) = block_eigen(a, d, y);
    let embed = |v: [Complex64; 2], i: usize, j: usize| {
        let mut out = [ZERO; 4];
        out[i] = v[0];
        out[j] = v[1];
        out
    };
    Ok(XSpectrum {
        values: [p1, p2, p3, p4],
        vectors: [embed(v1, 1, 2), embed(v2, 1, 2), embed(v3, 0, 3), embed(v4, 0, 3)],
    })
}

/// Eigenpairs of [[p, z], [z̄, q]], smaller eigenvalue first.
fn block_eigen(p: f64, q: f64, z: Complex64) -> (f64, f64, [Complex64; 2], [Complex64; 2]) {
    let root = ((p - q).powi(2) + 4.0 * z.norm_sqr()).sqrt();
    let lo = 0.5 * (p + q - root);
    let hi = 0.5 * (p + q + root);
    let vec_for = |lambda: f64, fallback: [Complex64; 2]| {
        // Both rows give an eigenvector; keep the better conditioned one.
        let from_second = [Complex64::new(lambda - q, 0.0), z.conj()];
        let from_first = [z, Complex64::new(lambda - p, 0.0)];
        let norm = |v: &[Complex64; 2]| (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        let (n1, n2) = (norm(&from_second), norm(&from_first));
        let (v, n) = if n1 >= n2 { (from_second, n1) } else { (from_first, n2) };
        if n < 1e-14 {
            fallback
        } else {
            [v[0] / n, v[1] / n]
        }
    };
    let one = Complex64::new(1.0, 0.0);
    let v_lo = vec_for(lo, [one, ZERO]);
    let v_hi = vec_for(hi, [ZERO, one]);
    (lo, hi, v_lo, v_hi)
}
