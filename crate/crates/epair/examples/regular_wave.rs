//! The physical scattering wave psi(+)_Lambda = N_Lambda u / sqrt(2 k rho):
//! rho^Lambda behavior at the origin, the constant overall phase
//! arg N = delta_Lambda, and the free limit collapsing onto the Bessel
//! function.
//!
//! Run with: cargo run --example regular_wave

use epair::scatter::{normalization, phase_shift, regular_radial_samples, regular_wave_samples};
use epair::specfun::bessel_j;

fn main() {
    let (lambda, k) = (1u32, 1.0);
    let n = normalization(lambda, k).unwrap();
    let delta = phase_shift(lambda, k).unwrap();
    println!("channel Lambda = {lambda}, k = {k}:");
    println!("  N_Lambda = {:.8}{:+.8}i", n.re, n.im);
    println!(
        "  arg N    = {:.8}  (= delta_Lambda = {:.8})",
        n.arg(),
        delta
    );

    let rhos = [0.001, 0.01, 0.1, 1.0, 5.0, 20.0, 60.0];
    let psis = regular_wave_samples(lambda, k, &rhos).unwrap();
    println!("\n{:>8} {:>26} {:>12}", "rho", "psi(+)", "|psi|");
    for (&rho, psi) in rhos.iter().zip(&psis) {
        println!(
            "{rho:>8.3} {:>26} {:>12.6e}",
            format!("{:.6e}{:+.6e}i", psi.re, psi.im),
            psi.norm()
        );
    }
    let slope = (psis[1].norm() / psis[0].norm()).ln() / (10.0f64).ln();
    println!("small-rho log-log slope: {slope:.6} (expect Lambda = {lambda})");

    // free limit: R reduces to Lambda! (2/k)^Lambda J_Lambda(k rho)
    println!("\nfree limit (Coulomb term disabled):");
    let rhos = [1.0, 3.0, 10.0, 30.0];
    let rs = regular_radial_samples(lambda, k, false, &rhos).unwrap();
    let scale = (k / 2.0).powi(lambda as i32); // 1/Lambda! with Lambda = 1
    println!("{:>8} {:>14} {:>14}", "rho", "scaled R", "J_Lambda(k rho)");
    for (&rho, &r) in rhos.iter().zip(&rs) {
        println!(
            "{rho:>8.1} {:>14.10} {:>14.10}",
            r * scale,
            bessel_j(lambda, k * rho).unwrap()
        );
    }
}
