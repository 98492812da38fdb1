use std::f64::consts::FRAC_PI_2;

use bures_discord::closed_forms::{
    char_poly_coeffs, classical_correlation_symmetric, symmetric_fidelity, x_candidate_discord,
    x_fidelity_equatorial, x_fidelity_z, SymmetricCase,
};
use bures_discord::discord::{fidelity_at_direction, lambda_matrix, max_fidelity_bruteforce, GridConfig, MeasurementDirection};
use bures_discord::linalg::{bures_distance_sq, herm_eigenvalues};
use bures_discord::states::sampling::{random_angles, random_symmetric_params, random_x_params, rng_from_seed};
use bures_discord::states::{x_state, TwoQubitState, XStateParams};
use num_complex::Complex64;
use proptest::prelude::*;

fn elementary(l: [f64; 4]) -> [f64; 4] {
    let mut e = [0.0; 4];
    e[0] = l.iter().sum();
    for i in 0..4 {
        for j in i + 1..4 {
            e[1] += l[i] * l[j];
            for k in j + 1..4 {
                e[2] += l[i] * l[j] * l[k];
            }
        }
    }
    e[3] = l.iter().product();
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn candidates_match_numeric_objective(seed in any::<u64>()) {
        let p = random_x_params(&mut rng_from_seed(seed));
        let rho = x_state(&p).unwrap();
        let axial = fidelity_at_direction(&rho, &MeasurementDirection::z()).unwrap();
        prop_assert!((x_fidelity_z(&p).unwrap() - axial).abs() < 1e-9);
        let (f, opt) = x_fidelity_equatorial(&p).unwrap();
        prop_assert!((f - fidelity_at_direction(&rho, &opt.direction()).unwrap()).abs() < 1e-9);
        let psi = -0.5 * p.phase_xy();
        let u = MeasurementDirection::from_angles(FRAC_PI_2, psi);
        prop_assert!((f - fidelity_at_direction(&rho, &u).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn char_poly_matches_vieta(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let p = random_x_params(&mut rng);
        let (theta, psi) = random_angles(&mut rng);
        let u = MeasurementDirection::from_angles(theta, psi);
        let c = char_poly_coeffs(&p, u.m(), psi).unwrap();
        let e = elementary(herm_eigenvalues(&lambda_matrix(&x_state(&p).unwrap(), &u).unwrap()).unwrap());
        prop_assert!((c.t3 + e[0]).abs() < 1e-10);
        prop_assert!((c.t2 - e[1]).abs() < 1e-10);
        prop_assert!((c.t1 + e[2]).abs() < 1e-10);
        prop_assert!((c.t0 - e[3]).abs() < 1e-10);
        prop_assert!((c.t0 - p.det()).abs() < 1e-12);
    }

    #[test]
    fn symmetric_spectrum_is_opposite_pairs(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let p = random_symmetric_params(&mut rng);
        let (theta, psi) = random_angles(&mut rng);
        let u = MeasurementDirection::from_angles(theta, psi);
        let mut l = herm_eigenvalues(&lambda_matrix(&x_state(&p).unwrap(), &u).unwrap()).unwrap();
        l.sort_by(f64::total_cmp);
        for i in 0..4 {
            prop_assert!((l[i] + l[3 - i]).abs() < 1e-10, "{l:?}");
        }
    }

    #[test]
    fn classical_correlation_is_distance_to_maximally_mixed(seed in any::<u64>()) {
        let p = random_symmetric_params(&mut rng_from_seed(seed));
        let cc = classical_correlation_symmetric(&p).unwrap();
        let d = bures_distance_sq(x_state(&p).unwrap().matrix(), TwoQubitState::maximally_mixed().matrix()).unwrap();
        prop_assert!((cc.c_bu - d).abs() < 1e-8);
    }

    #[test]
    fn branches_agree_on_the_boundary(a in 0.0f64..0.5, split in 0.0f64..1.0, px in 0.0f64..6.3, py in 0.0f64..6.3) {
        // |a - b| = |x| + |y| with b = 1/2 - a.
        let b = 0.5 - a;
        let total = (a - b).abs();
        let (ax, ay) = (split * total, (1.0 - split) * total);
        prop_assume!(ax <= b && ay <= a);
        let p = XStateParams::symmetric(a, b, Complex64::from_polar(ax, px), Complex64::from_polar(ay, py)).unwrap();
        let (_, branch) = symmetric_fidelity(&p).unwrap();
        prop_assert_eq!(branch.case, SymmetricCase::Boundary);
        prop_assert!((branch.f_axial - branch.f_equatorial).abs() < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn symmetric_closed_form_is_exact(seed in any::<u64>()) {
        let p = random_symmetric_params(&mut rng_from_seed(seed));
        let (closed, _) = symmetric_fidelity(&p).unwrap();
        let brute = max_fidelity_bruteforce(&x_state(&p).unwrap(), &GridConfig::default()).unwrap();
        prop_assert!((closed.fidelity - brute.fidelity).abs() <= 2e-6);
    }

    #[test]
    fn candidates_bound_the_optimum(seed in any::<u64>()) {
        let p = random_x_params(&mut rng_from_seed(seed));
        let (candidate, _) = x_candidate_discord(&p).unwrap();
        let brute = max_fidelity_bruteforce(&x_state(&p).unwrap(), &GridConfig::default()).unwrap();
        prop_assert!(candidate.fidelity <= brute.fidelity + 1e-9);
        prop_assert!(candidate.discord >= brute.discord - 2e-6);
    }
}
