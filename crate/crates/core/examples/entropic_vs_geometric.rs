// Entropic discord next to the Bures discord on a family of X-states.

use bures_discord::prelude::*;
use num_complex::Complex64;

fn run_example() -> Result<()> {
    let grid = GridConfig::default();
    println!("{:>6} {:>12} {:>12} {:>12}", "|x|", "D_Bures", "D_entropic", "I(A:B)");
    for i in 0..=4 {
        let x = 0.05 * i as f64;
        let p = XStateParams::new(0.3, 0.25, 0.25, 0.2, Complex64::new(x, 0.0), Complex64::new(0.1, 0.0))?;
        let rho = x_state(&p)?;
        let bures = max_fidelity_bruteforce(&rho, &grid)?;
        let entropic = entropic_discord(&rho, &grid)?;
        println!(
            "{x:>6.2} {:>12.8} {:>12.8} {:>12.8}",
            bures.discord,
            entropic.discord,
            mutual_information(&rho)?
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
