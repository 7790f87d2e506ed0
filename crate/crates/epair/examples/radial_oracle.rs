//! Cross-validation of the closed-form phase shifts against a numerical
//! integration of the radial equation
//!   R'' + R'/rho + (k^2 - 1/rho - Lambda^2/rho^2) R = 0
//! from the regular origin behavior, matching the asymptotic Coulomb
//! basis at k rho = 400 and 800.
//!
//! Run with: cargo run --example radial_oracle

use epair::scatter::{dist_mod_pi, phase_shift, radial_oracle};

fn main() {
    println!(
        "{:>7} {:>6} {:>16} {:>16} {:>12}",
        "Lambda", "k", "delta analytic", "delta ODE", "|diff| mod pi"
    );
    let mut worst = 0.0_f64;
    for lam in 0..=5u32 {
        for &k in &[0.2, 0.5, 1.0, 2.0, 5.0] {
            let analytic = phase_shift(lam, k).unwrap();
            let numeric = radial_oracle(lam, k).unwrap();
            let diff = dist_mod_pi(analytic, numeric);
            worst = worst.max(diff);
            println!("{lam:>7} {k:>6.2} {analytic:>16.10} {numeric:>16.10} {diff:>12.3e}");
        }
    }
    println!("\nworst disagreement over the grid: {worst:.3e} rad (mod pi)");
    println!("(the ODE route never touches the gamma function)");
}
