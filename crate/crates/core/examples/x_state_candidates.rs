// Axial and equatorial candidate fidelities for X-states and how they
// compare with the numerical optimum.

use bures_discord::prelude::*;
use num_complex::Complex64;

fn report(name: &str, p: &XStateParams) -> Result<()> {
    let (candidate, parts) = x_candidate_discord(p)?;
    let brute = max_fidelity_bruteforce(&x_state(p)?, &GridConfig::default())?;
    let bound = discord_upper_bound(p)?;
    println!("{name}");
    println!("  F axial      = {:.10}", parts.f_axial);
    println!("  F equatorial = {:.10}", parts.f_equatorial);
    println!("  F brute      = {:.10}  (gap {:.2e})", brute.fidelity, brute.fidelity - candidate.fidelity);
    println!("  D upper      = {:.10}  D brute = {:.10}", bound.d_upper, brute.discord);
    if let Some(u) = brute.direction() {
        println!("  optimum at theta = {:.6}, psi = {:.6}", u.theta(), u.psi());
    }
    Ok(())
}

fn run_example() -> Result<()> {
    let real = |v: f64| Complex64::new(v, 0.0);
    report("generic", &XStateParams::new(0.4, 0.3, 0.2, 0.1, real(0.05), real(0.1))?)?;
    let (t, s) = (1.0 / 3.0, 1.0 / 6.0);
    report("a = b = 1/3, c = d = |x| = |y| = 1/6", &XStateParams::new(t, t, s, s, real(s), real(s))?)?;
    report(
        "complex coherences",
        &XStateParams::new(0.35, 0.15, 0.25, 0.25, Complex64::from_polar(0.12, 0.8), Complex64::from_polar(0.2, -0.3))?,
    )?;
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
