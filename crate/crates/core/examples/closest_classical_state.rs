// Closest A-classical states: the measurement construction, the diagonal
// axial state and the explicit family for symmetric X-states.

use bures_discord::closed_forms::CcsChoice;
use bures_discord::prelude::*;
use num_complex::Complex64;

fn print_diagonal(label: &str, sigma: &TwoQubitState) {
    let d: Vec<String> = (0..4).map(|i| format!("{:.6}", sigma.0[i][i].re)).collect();
    println!("  {label}: diag = [{}]", d.join(", "));
}

fn run_example() -> Result<()> {
    let grid = GridConfig::default();

    let p = XStateParams::new(0.4, 0.3, 0.2, 0.1, Complex64::new(0.05, 0.0), Complex64::new(0.1, 0.0))?;
    let rho = x_state(&p)?;
    let best = max_fidelity_bruteforce(&rho, &grid)?;
    let sigma = x_ccs_z(&p)?;
    println!("axial optimum, F = {:.10}", best.fidelity);
    print_diagonal("axial CCS", &sigma);
    println!("  F(rho, sigma) = {:.10}", fidelity(&rho, &sigma)?);
    println!("  discord of sigma = {:.2e}", max_fidelity_bruteforce(&sigma, &grid)?.discord);

    let bell = TwoQubitState::bell_phi_plus();
    let u = MeasurementDirection::from_angles(1.0, 0.4);
    let out = ccs_from_measurement(&bell, &u)?;
    println!("Bell state, arbitrary direction: F(rho, sigma) = {:.10}", out.fidelity_check);

    let members = [
        XStateParams::symmetric(0.3, 0.2, Complex64::from_polar(0.2, 0.4), Complex64::from_polar(0.1, 1.1))?,
        XStateParams::symmetric(0.05, 0.45, Complex64::from_polar(0.1, -0.5), Complex64::from_polar(0.05, 2.0))?,
        XStateParams::symmetric(0.3, 0.2, Complex64::new(0.12, 0.0), Complex64::new(0.05, 0.0))?,
    ];
    for s in members {
        let (exact, _) = symmetric_fidelity(&s)?;
        println!("symmetric state a = {}, b = {}, F = {:.10}", s.a, s.b, exact.fidelity);
        for r in [-1.0, 0.0, 0.5, 1.0] {
            let ccs = symmetric_ccs(&s, CcsChoice::R(r))?;
            println!("  r = {r:>4}: {:?} / {:?}, F(rho, sigma_r) = {:.10}", ccs.branch, ccs.source, ccs.fidelity);
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
