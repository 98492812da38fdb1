// Bures discord along the Werner family, brute force against the closed form.

use bures_discord::prelude::*;

fn run_example() -> Result<()> {
    let grid = GridConfig::default();
    println!("{:>5} {:>12} {:>12} {:>10}", "w", "D_closed", "D_brute", "|diff|");
    for i in 0..=10 {
        let w = i as f64 / 10.0;
        let (closed, _) = symmetric_fidelity(&XStateParams::werner(w)?)?;
        let brute = max_fidelity_bruteforce(&TwoQubitState::werner(w)?, &grid)?;
        println!(
            "{w:>5.2} {:>12.8} {:>12.8} {:>10.2e}",
            closed.discord,
            brute.discord,
            (closed.discord - brute.discord).abs()
        );
    }
    let bell = max_fidelity_bruteforce(&TwoQubitState::bell_phi_plus(), &grid)?;
    println!("Bell state: D = {:.10} (2 - sqrt 2 = {:.10})", bell.discord, 2.0 - 2f64.sqrt());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
