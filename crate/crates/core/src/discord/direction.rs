use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{paulis, ComplexMatrix2};

/// Tolerance on `| |u| - 1 |`.
pub const UNIT_TOL: f64 = 1e-12;

/// Unit Bloch vector `u = (sinθ cosψ, sinθ sinψ, cosθ)` of a projective
/// measurement on qubit A.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct MeasurementDirection {
    u: [f64; 3],
}

impl MeasurementDirection {
    pub fn new(u: [f64; 3]) -> Result<Self> {
        let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidParams(format!("direction norm {norm} is not 1")));
        }
        Ok(Self { u })
    }

    /// Rescales a nonzero vector to unit length.
    pub fn normalized(v: [f64; 3]) -> Result<Self> {
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidParams("cannot normalize a zero direction".into()));
        }
        Ok(Self { u: v.map(|x| x / norm) })
    }

    pub fn from_angles(theta: f64, psi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = psi.sin_cos();
        Self { u: [st * cp, st * sp, ct] }
    }

    pub fn z() -> Self {
        Self { u: [0.0, 0.0, 1.0] }
    }

    pub fn vector(&self) -> [f64; 3] {
        self.u
    }

    pub fn theta(&self) -> f64 {
        self.u[2].clamp(-1.0, 1.0).acos()
    }

    /// Azimuth in `[0, 2π)`; zero at the poles.
    pub fn psi(&self) -> f64 {
        if self.u[0] == 0.0 && self.u[1] == 0.0 {
            0.0
        } else {
            self.u[1].atan2(self.u[0]).rem_euclid(TAU)
        }
    }

    /// `m = cosθ`.
    pub fn m(&self) -> f64 {
        self.u[2]
    }

    /// `n = sinθ e^{iψ}`.
    pub fn n(&self) -> Complex64 {
        Complex64::new(self.u[0], self.u[1])
    }

    pub fn neg(&self) -> Self {
        Self { u: self.u.map(|v| -v) }
    }

    /// `u·σ`.
    pub fn sigma(&self) -> ComplexMatrix2 {
        let s = paulis();
        s[0].scale(self.u[0]) + s[1].scale(self.u[1]) + s[2].scale(self.u[2])
    }

    /// `(I ± u·σ)/2`, the projectors of the measurement.
    pub fn projectors(&self) -> [ComplexMatrix2; 2] {
        let id = ComplexMatrix2::identity();
        let s = self.sigma();
        [(id + s).scale(0.5), (id - s).scale(0.5)]
    }

    /// Representative of `{u, -u}` (the same measurement) on the closed upper
    /// hemisphere, with ψ in `[0, π)` on the equator.
    pub fn canonical(&self) -> Self {
        const EQUATOR: f64 = 1e-14;
        let flip = if self.u[2].abs() > EQUATOR {
            self.u[2] < 0.0
        } else {
            let psi = self.u[1].atan2(self.u[0]).rem_euclid(TAU);
            psi >= PI
        };
        if flip {
            self.neg()
        } else {
            *self
        }
    }

    /// Angle between the two measurement axes, in `[0, π/2]`.
    pub fn axis_angle(&self, other: &Self) -> f64 {
        let dot: f64 = self.u.iter().zip(&other.u).map(|(a, b)| a * b).sum();
        dot.abs().clamp(0.0, 1.0).acos()
    }
}

impl TryFrom<[f64; 3]> for MeasurementDirection {
    type Error = Error;
    fn try_from(u: [f64; 3]) -> Result<Self> {
        Self::new(u)
    }
}

impl From<MeasurementDirection> for [f64; 3] {
    fn from(d: MeasurementDirection) -> Self {
        d.u
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles_round_trip() {
        let d = MeasurementDirection::from_angles(1.1, 4.0);
        assert!((d.theta() - 1.1).abs() < 1e-14);
        assert!((d.psi() - 4.0).abs() < 1e-14);
    }

    #[test]
    fn canonical_lies_in_upper_hemisphere() {
        let d = MeasurementDirection::from_angles(2.5, 1.0).canonical();
        assert!(d.m() > 0.0);
        let e = MeasurementDirection::from_angles(std::f64::consts::FRAC_PI_2, 4.0).canonical();
        assert!(e.psi() < PI);
    }

    #[test]
    fn rejects_non_unit() {
        assert!(MeasurementDirection::new([1.0, 1.0, 0.0]).is_err());
        assert!(MeasurementDirection::normalized([0.0; 3]).is_err());
    }

    #[test]
    fn projectors_sum_to_identity() {
        let d = MeasurementDirection::from_angles(0.3, 0.9);
        let [p, q] = d.projectors();
        assert!(((p + q) - ComplexMatrix2::identity()).max_abs() < 1e-15);
        assert!((p * p - p).max_abs() < 1e-15);
    }
}
