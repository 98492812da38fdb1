// Driving the command layer from JSON: a general (non-X) state given as a
// matrix, run through automatic dispatch and the CCS report.

use bures_discord::cli::{cmd_ccs, cmd_discord, DiscordMethod, StateSpec};
use bures_discord::prelude::*;
use bures_discord::states::sampling::{random_state, rng_from_seed};

fn run_example() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let rho = random_state(&mut rng_from_seed(9), 3);
    let json = serde_json::to_string(&StateSpec::matrix(&rho))?;
    let spec: StateSpec = serde_json::from_str(&json)?;
    let grid = GridConfig::default();

    let report = cmd_discord(&spec, DiscordMethod::Auto, &grid)?;
    println!("dispatch: {}", report.dispatch.join(" | "));
    println!("F = {:.10}, D = {:.10}", report.fidelity, report.discord);

    let ccs = cmd_ccs(&spec, None, None, &grid)?;
    println!(
        "CCS: source {}, F(rho, sigma) = {:.10}, discord of sigma = {:.2e}",
        ccs.source, ccs.fidelity_check, ccs.ccs_discord
    );
    let form = BlochForm::from_state(&rho);
    println!("Bloch vector of A: {:?}", form.c_a);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
