// Geometric classical correlation of symmetric X-states and the
// Bell-diagonal frame they are locally equivalent to.

use bures_discord::prelude::*;
use bures_discord::states::bell_diagonal_frame;
use num_complex::Complex64;

fn run_example() -> Result<()> {
    let states = [
        ("I/4", XStateParams::symmetric(0.25, 0.25, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))?),
        ("Werner 0.5", XStateParams::werner(0.5)?),
        ("Bell", XStateParams::werner(1.0)?),
        ("complex", XStateParams::symmetric(0.3, 0.2, Complex64::from_polar(0.1, 0.5), Complex64::from_polar(0.25, 2.0))?),
    ];
    let mixed = TwoQubitState::maximally_mixed();
    for (name, p) in states {
        let cc = classical_correlation_symmetric(&p)?;
        let frame = bell_diagonal_frame(&p)?;
        let distance = bures_distance_sq(x_state(&p)?.matrix(), mixed.matrix())?;
        println!(
            "{name:<12} C_Bu = {:.10}  d_B^2(rho, I/4) = {:.10}  c' = [{:.4}, {:.4}, {:.4}]",
            cc.c_bu, distance, frame.c_prime[0], frame.c_prime[1], frame.c_prime[2]
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
