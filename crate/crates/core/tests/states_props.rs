use bures_discord::discord::{max_fidelity_bruteforce, GridConfig};
use bures_discord::linalg::{fidelity, herm_eigenvalues};
use bures_discord::states::sampling::{
    random_classical_params, random_state, random_unitary, random_x_params, rng_from_seed,
};
use bures_discord::states::{classical_state, local_unitary, x_spectrum, x_state, BlochForm, XStateParams};
use proptest::prelude::*;

fn sorted(mut v: [f64; 4]) -> [f64; 4] {
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn x_params_round_trip(seed in any::<u64>()) {
        let p = random_x_params(&mut rng_from_seed(seed));
        let back = XStateParams::from_state(&x_state(&p).unwrap(), 1e-14).unwrap();
        prop_assert!((back.a - p.a).abs() < 1e-15 && (back.d - p.d).abs() < 1e-15);
        prop_assert!((back.x - p.x).norm() < 1e-15 && (back.y - p.y).norm() < 1e-15);
        prop_assert!((back.b - p.b).abs() < 1e-15 && (back.c - p.c).abs() < 1e-15);
    }

    #[test]
    fn x_spectrum_matches_numeric(seed in any::<u64>()) {
        let p = random_x_params(&mut rng_from_seed(seed));
        let closed = sorted(x_spectrum(&p).unwrap().values);
        let numeric = sorted(herm_eigenvalues(x_state(&p).unwrap().matrix()).unwrap());
        for (a, b) in closed.iter().zip(numeric) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bloch_round_trip(seed in any::<u64>(), rank in 1usize..=4) {
        let rho = random_state(&mut rng_from_seed(seed), rank);
        let form = BlochForm::from_state(&rho);
        let back = form.to_state().unwrap();
        prop_assert!((*back.matrix() - *rho.matrix()).max_abs() < 1e-10);
    }

    #[test]
    fn local_unitary_preserves_fidelity(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let rho = random_state(&mut rng, 4);
        let sigma = random_state(&mut rng, 2);
        let (ua, ub) = (random_unitary(&mut rng), random_unitary(&mut rng));
        let before = fidelity(&rho, &sigma).unwrap();
        let after = fidelity(&local_unitary(&rho, &ua, &ub).unwrap(), &local_unitary(&sigma, &ua, &ub).unwrap()).unwrap();
        prop_assert!((before - after).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn classical_states_have_no_discord(seed in any::<u64>()) {
        let params = random_classical_params(&mut rng_from_seed(seed));
        let rho = classical_state(&params).unwrap();
        let r = max_fidelity_bruteforce(&rho, &GridConfig::default()).unwrap();
        prop_assert!(r.discord <= 1e-6, "discord {}", r.discord);
    }
}
