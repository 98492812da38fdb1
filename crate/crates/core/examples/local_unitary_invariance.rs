// The optimal fidelity is unchanged by local unitaries, while the optimal
// measurement direction rotates with the unitary on A.

use bures_discord::prelude::*;
use bures_discord::states::sampling::{random_unitary, random_x_params, rng_from_seed};

fn run_example() -> Result<()> {
    let grid = GridConfig::default();
    let mut rng = rng_from_seed(11);
    for _ in 0..4 {
        let p = random_x_params(&mut rng);
        let rho = x_state(&p)?;
        let (ua, ub) = (random_unitary(&mut rng), random_unitary(&mut rng));
        let rotated = local_unitary(&rho, &ua, &ub)?;
        let f0 = max_fidelity_bruteforce(&rho, &grid)?;
        let f1 = max_fidelity_bruteforce(&rotated, &grid)?;
        println!(
            "F = {:.10}  F(rotated) = {:.10}  |diff| = {:.2e}",
            f0.fidelity,
            f1.fidelity,
            (f0.fidelity - f1.fidelity).abs()
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
