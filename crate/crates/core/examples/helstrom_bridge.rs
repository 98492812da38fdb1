// The measurement objective equals the optimal success probability of
// discriminating the ensemble the measurement induces on B.

use bures_discord::prelude::*;
use bures_discord::states::sampling::{random_state, rng_from_seed, unit_vector};

fn run_example() -> Result<()> {
    let mut rng = rng_from_seed(3);
    println!("{:>4} {:>14} {:>14} {:>10}", "rank", "objective", "helstrom", "|diff|");
    for rank in [1, 2, 3, 4, 4] {
        let rho = random_state(&mut rng, rank);
        let u = MeasurementDirection::normalized(unit_vector(&mut rng))?;
        let objective = fidelity_at_direction(&rho, &u)?;
        let ensemble = induced_ensemble(&rho, &u)?;
        let success = helstrom_success(&ensemble)?;
        println!("{rank:>4} {objective:>14.10} {success:>14.10} {:>10.2e}", (objective - success).abs());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
