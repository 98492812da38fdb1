use bures_discord::discord::{
    ccs_from_measurement, fidelity_at_direction, helstrom_success, induced_ensemble, lambda_matrix,
    max_fidelity_bruteforce, GridConfig, MeasurementDirection,
};
use bures_discord::linalg::{psd_sqrt, trace_norm, ComplexMatrix2, ComplexMatrix4};
use bures_discord::states::sampling::{
    random_state, random_unitary, random_x_params, rng_from_seed, unit_vector,
};
use bures_discord::states::{local_unitary, x_state, TwoQubitState};
use proptest::prelude::*;

fn direction(seed: u64) -> MeasurementDirection {
    MeasurementDirection::normalized(unit_vector(&mut rng_from_seed(seed))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn bridge_identity(seed in any::<u64>(), rank in 1usize..=4, useed in any::<u64>()) {
        let rho = random_state(&mut rng_from_seed(seed), rank);
        let u = direction(useed);
        let objective = fidelity_at_direction(&rho, &u).unwrap();
        let success = helstrom_success(&induced_ensemble(&rho, &u).unwrap()).unwrap();
        prop_assert!((objective - success).abs() < 1e-9);
    }

    #[test]
    fn full_rank_trace_norm_form(seed in any::<u64>(), useed in any::<u64>()) {
        let rho = random_state(&mut rng_from_seed(seed), 4);
        let u = direction(useed);
        let objective = fidelity_at_direction(&rho, &u).unwrap();
        let via_norm = 0.5 * (1.0 + trace_norm(&lambda_matrix(&rho, &u).unwrap()).unwrap());
        prop_assert!((objective - via_norm).abs() < 1e-9);
        // Same value from sqrt(rho) (sigma_u ⊗ I) sqrt(rho) built independently.
        let s = psd_sqrt(rho.matrix()).unwrap();
        let lam = s * u.sigma().kron(&ComplexMatrix2::identity()) * s;
        prop_assert!((0.5 * (1.0 + trace_norm(&lam).unwrap()) - objective).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn local_unitary_invariance(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let rho = random_state(&mut rng, 4);
        let (ua, ub) = (random_unitary(&mut rng), random_unitary(&mut rng));
        let grid = GridConfig::default();
        let f0 = max_fidelity_bruteforce(&rho, &grid).unwrap().fidelity;
        let f1 = max_fidelity_bruteforce(&local_unitary(&rho, &ua, &ub).unwrap(), &grid).unwrap().fidelity;
        prop_assert!((f0 - f1).abs() <= 2e-6);
    }

    #[test]
    fn ccs_is_classical_with_unit_trace(seed in any::<u64>(), rank in 1usize..=4, useed in any::<u64>()) {
        let rho = random_state(&mut rng_from_seed(seed), rank);
        let out = ccs_from_measurement(&rho, &direction(useed)).unwrap();
        prop_assert!((out.state.trace().re - 1.0).abs() < 1e-10);
        let d = max_fidelity_bruteforce(&out.state, &GridConfig::default()).unwrap().discord;
        prop_assert!(d <= 1e-6, "discord {d}");
    }

    #[test]
    fn fidelity_ceiling(seed in any::<u64>()) {
        let p = random_x_params(&mut rng_from_seed(seed));
        let rho = x_state(&p).unwrap();
        let best = max_fidelity_bruteforce(&rho, &GridConfig::default()).unwrap().fidelity;
        for i in 0..12 {
            for j in 0..12 {
                let u = MeasurementDirection::from_angles(std::f64::consts::PI * i as f64 / 11.0, std::f64::consts::TAU * j as f64 / 12.0);
                prop_assert!(fidelity_at_direction(&rho, &u).unwrap() <= best + 1e-9);
            }
        }
    }

    #[test]
    fn entangled_pure_states_have_discord(theta in 0.3f64..1.2, seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let (ua, ub) = (random_unitary(&mut rng), random_unitary(&mut rng));
        let (c, s) = (theta.cos(), theta.sin());
        let mut psi = [num_complex::Complex64::new(0.0, 0.0); 4];
        psi[0] = c.into();
        psi[3] = s.into();
        let rho = TwoQubitState::new(ComplexMatrix4::outer(&psi, &psi)).unwrap();
        let rho = local_unitary(&rho, &ua, &ub).unwrap();
        let d = max_fidelity_bruteforce(&rho, &GridConfig::default()).unwrap().discord;
        prop_assert!(d >= 1e-3, "discord {d}");
    }
}
