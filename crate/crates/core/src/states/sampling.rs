//! Seeded random generators for states, unitaries and directions.
//!
//! Every generator produces a valid object by construction, so callers never
//! have to reject samples.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{ClassicalStateParams, TwoQubitState, XStateParams};
use crate::linalg::{ComplexMatrix2, ComplexMatrix4};

pub type SampleRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point on the probability simplex with four vertices.
pub fn simplex4<R: Rng + ?Sized>(rng: &mut R) -> [f64; 4] {
    let mut cuts = [rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>()];
    cuts.sort_by(f64::total_cmp);
    [cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]]
}

fn phase<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.gen_range(0.0..TAU)
}

fn coherence<R: Rng + ?Sized>(rng: &mut R, max_radius: f64) -> Complex64 {
    Complex64::from_polar(rng.gen::<f64>() * max_radius, phase(rng))
}

/// Uniform unit vector on the sphere.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let psi = phase(rng);
    let rho = (1.0 - z * z).max(0.0).sqrt();
    [rho * psi.cos(), rho * psi.sin(), z]
}

/// Uniform point in the closed unit ball.
pub fn ball_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let r = rng.gen::<f64>().cbrt();
    unit_vector(rng).map(|v| r * v)
}

/// General X-state: flat simplex diagonal, coherences with radius uniform in
/// `[0, sqrt(bc)]` (resp. `sqrt(ad)`) and uniform phase.
pub fn random_x_params<R: Rng + ?Sized>(rng: &mut R) -> XStateParams {
    let [a, b, c, d] = simplex4(rng);
    let x = coherence(rng, (b * c).sqrt());
    let y = coherence(rng, (a * d).sqrt());
    XStateParams { a, b, c, d, x, y }
}

/// Member of the a = d, b = c family.
pub fn random_symmetric_params<R: Rng + ?Sized>(rng: &mut R) -> XStateParams {
    let a = rng.gen_range(0.0..=0.5);
    let b = 0.5 - a;
    let x = coherence(rng, b);
    let y = coherence(rng, a);
    XStateParams { a, b, c: b, d: a, x, y }
}

pub fn random_classical_params<R: Rng + ?Sized>(rng: &mut R) -> ClassicalStateParams {
    ClassicalStateParams {
        p: rng.gen_range(0.0..=0.5),
        r: unit_vector(rng),
        s: ball_vector(rng),
        t: ball_vector(rng),
    }
}

/// Haar-random single-qubit unitary, built from a uniform unit quaternion and
/// a uniform global phase.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix2 {
    let q: [f64; 4] = std::array::from_fn(|_| rng.sample::<f64, _>(StandardNormal));
    let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
    let [w, x, y, z] = q.map(|v| v / n);
    let g = Complex64::from_polar(1.0, phase(rng));
    let mut u = ComplexMatrix2::zeros();
    u.0[0][0] = g * Complex64::new(w, z);
    u.0[0][1] = g * Complex64::new(y, x);
    u.0[1][0] = g * Complex64::new(-y, x);
    u.0[1][1] = g * Complex64::new(w, -z);
    u
}

/// `G G^dagger / tr` with `G` a 4×`rank` complex Gaussian matrix.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R, rank: usize) -> TwoQubitState {
    let rank = rank.clamp(1, 4);
    let mut m = ComplexMatrix4::zeros();
    for _ in 0..rank {
        let v: [Complex64; 4] = std::array::from_fn(|_| {
            Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        m += ComplexMatrix4::outer(&v, &v);
    }
    let tr = m.trace().re;
    TwoQubitState::from_matrix_unchecked(m.scale(1.0 / tr))
}

/// Random Hermitian matrix with Gaussian entries.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    let g = ComplexMatrix4::from_fn(|_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    (g + g.adjoint()).scale(0.5)
}

/// X-states on which both the determinant and the linear coefficient of the
/// characteristic polynomial vanish: `b = c = |x|`, `a = d = |y|`, or
/// `ad = |y|²` together with `bc = |x|²`.
pub fn random_degenerate_params<R: Rng + ?Sized>(rng: &mut R) -> XStateParams {
    match rng.gen_range(0..3) {
        0 => {
            let b = rng.gen_range(0.0..=0.5);
            let a = rng.gen::<f64>() * (1.0 - 2.0 * b);
            let d = 1.0 - 2.0 * b - a;
            XStateParams { a, b, c: b, d, x: Complex64::from_polar(b, phase(rng)), y: coherence(rng, (a * d).sqrt()) }
        }
        1 => {
            let a = rng.gen_range(0.0..=0.5);
            let b = rng.gen::<f64>() * (1.0 - 2.0 * a);
            let c = 1.0 - 2.0 * a - b;
            XStateParams { a, b, c, d: a, x: coherence(rng, (b * c).sqrt()), y: Complex64::from_polar(a, phase(rng)) }
        }
        _ => {
            let [a, b, c, d] = simplex4(rng);
            XStateParams {
                a,
                b,
                c,
                d,
                x: Complex64::from_polar((b * c).sqrt(), phase(rng)),
                y: Complex64::from_polar((a * d).sqrt(), phase(rng)),
            }
        }
    }
}

/// Polar angle uniform in `[0, π]` and azimuth uniform in `[0, 2π)`.
pub fn random_angles<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    (rng.gen_range(0.0..=PI), phase(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::herm_eigenvalues;

    #[test]
    fn samplers_produce_valid_objects() {
        let mut rng = rng_from_seed(7);
        for _ in 0..200 {
            random_x_params(&mut rng).validate().unwrap();
            let s = random_symmetric_params(&mut rng);
            s.validate().unwrap();
            assert!(s.is_symmetric(0.0));
            random_classical_params(&mut rng).validate().unwrap();
            random_degenerate_params(&mut rng).validate().unwrap();
            random_unitary(&mut rng).ensure_unitary(1e-12).unwrap();
            let rho = random_state(&mut rng, 4);
            assert!(herm_eigenvalues(rho.matrix()).unwrap()[3] > 0.0);
            let u = unit_vector(&mut rng);
            assert!((u.iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn seeded_streams_repeat() {
        let a = random_x_params(&mut rng_from_seed(42));
        let b = random_x_params(&mut rng_from_seed(42));
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_samples_have_zero_determinant() {
        let mut rng = rng_from_seed(3);
        for _ in 0..100 {
            assert!(random_degenerate_params(&mut rng).det().abs() < 1e-15);
        }
    }
}
