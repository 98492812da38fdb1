// X-states whose characteristic polynomial loses its constant and linear
// terms, where the maximal fidelity has a closed form.

use bures_discord::closed_forms::printed_optimal_m;
use bures_discord::prelude::*;
use bures_discord::states::sampling::{random_degenerate_params, rng_from_seed};

fn run_example() -> Result<()> {
    let grid = GridConfig::default();
    let mut rng = rng_from_seed(5);
    println!("{:>12} {:>12} {:>10} {:>9} {:>9}", "F_closed", "F_brute", "|diff|", "g", "Delta");
    for _ in 0..6 {
        let p = random_degenerate_params(&mut rng);
        let deg = degenerate_fidelity(&p)?;
        let brute = max_fidelity_bruteforce(&x_state(&p)?, &grid)?;
        println!(
            "{:>12.9} {:>12.9} {:>10.2e} {:>9.4} {:>9.4}",
            deg.fidelity,
            brute.fidelity,
            (deg.fidelity - brute.fidelity).abs(),
            deg.g,
            deg.delta
        );
    }

    let (t, s) = (1.0 / 3.0, 1.0 / 6.0);
    let q = num_complex::Complex64::new(s, 0.0);
    let p = XStateParams::new(t, t, s, s, q, q)?;
    println!("sign table for a = b = 1/3, c = d = |x| = |y| = 1/6: {:?}", printed_optimal_m(&p));
    for m in [0.0, 0.3f64.sqrt(), 1.0] {
        println!("  lambda1({m:.6}) = {:.12}", lambda1_profile(&p, m)?.lambda1);
    }
    match degenerate_fidelity(&p) {
        Ok(_) => println!("  unexpectedly degenerate"),
        Err(e) => println!("  closed form not applicable: {e}"),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
