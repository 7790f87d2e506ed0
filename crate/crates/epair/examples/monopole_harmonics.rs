//! Sectional monopole harmonics Y_{l m Lambda} on the momentum sphere:
//! the spin-1/2 doublet in half angles, the transition between patches,
//! and a numerical check of unit normalization.
//!
//! Run with: cargo run --example monopole_harmonics

use epair::monopole::{harmonic, MonopoleState, PatchId, SphericalPoint};
use std::f64::consts::PI;

fn main() {
    // the l = Lambda = 1/2 doublet: sin/cos of half angles
    println!("spin-1/2 doublet on the North patch (p = 1):");
    let up = MonopoleState::new(1, 1, 1).unwrap();
    let dn = MonopoleState::new(1, -1, 1).unwrap();
    println!(
        "{:>8} {:>24} {:>24} {:>12} {:>12}",
        "theta", "Y(m=+1/2)", "Y(m=-1/2)", "sin(th/2)", "cos(th/2)"
    );
    for i in 1..6 {
        let theta = PI * i as f64 / 7.0;
        let pt = SphericalPoint::new(theta, 0.9, 1.0).unwrap();
        let yu = harmonic(&up, &pt, PatchId::North).unwrap();
        let yd = harmonic(&dn, &pt, PatchId::North).unwrap();
        println!(
            "{theta:>8.3} {:>24} {:>24} {:>12.6} {:>12.6}",
            format!("{:.6}{:+.6}i", yu.re, yu.im),
            format!("{:.6}{:+.6}i", yd.re, yd.im),
            (theta / 2.0).sin(),
            (theta / 2.0).cos(),
        );
    }

    // unit norm over the sphere by simple quadrature
    println!("\nL2 norms over the sphere (midpoint quadrature, l <= 3/2):");
    for (two_l, two_m, two_lambda) in [(0, 0, 0), (1, 1, 1), (2, 2, 0), (3, 1, 3)] {
        let state = MonopoleState::new(two_l, two_m, two_lambda).unwrap();
        let (n_theta, n_phi) = (400, 40);
        let mut norm2 = 0.0;
        for i in 0..n_theta {
            let theta = PI * (i as f64 + 0.5) / n_theta as f64;
            let patch = if theta <= PI / 2.0 {
                PatchId::North
            } else {
                PatchId::South
            };
            for j in 0..n_phi {
                let phi = 2.0 * PI * j as f64 / n_phi as f64;
                let pt = SphericalPoint::new(theta, phi, 1.0).unwrap();
                let y = harmonic(&state, &pt, patch).unwrap();
                norm2 +=
                    y.norm_sqr() * theta.sin() * (PI / n_theta as f64) * (2.0 * PI / n_phi as f64);
            }
        }
        println!(
            "  (2l, 2m, 2Lambda) = ({two_l}, {two_m}, {two_lambda}): integral |Y|^2 = {norm2:.10}"
        );
    }

    // transition factor between the patches on the equator
    let state = MonopoleState::new(3, 1, 1).unwrap();
    let pt = SphericalPoint::new(PI / 2.0, 1.1, 1.0).unwrap();
    let yn = harmonic(&state, &pt, PatchId::North).unwrap();
    let ys = harmonic(&state, &pt, PatchId::South).unwrap();
    println!(
        "\noverlap band: Y_S / Y_N = {:.6}{:+.6}i",
        (ys / yn).re,
        (ys / yn).im
    );
    println!(
        "expected   exp(-2 i Lambda phi) = {:.6}{:+.6}i",
        (1.1f64).cos(),
        -(1.1f64).sin()
    );
}
