//! Bloch representation of the scattering amplitude
//! f_S(k, phi) = e^{i S phi} sum_n e^{2 i n phi} f_{2n+S}(k)
//! and the fourth-power differential cross section. Demonstrates the
//! exchange symmetry f_S(phi + pi) = (-1)^S f_S(phi).
//!
//! Run with: cargo run --example scattering_amplitude

use epair::scatter::{AmplitudeSeries, BlochSum};
use std::f64::consts::PI;

fn main() {
    let k = 1.0;
    let n_max = 64;
    let singlet = AmplitudeSeries::build(0, k, n_max).unwrap();
    let triplet = AmplitudeSeries::build(1, k, n_max).unwrap();

    println!("k = {k} 1/bohr, truncation n_max = {n_max}, symmetrized Bloch sum");
    println!(
        "{:>8} {:>12} {:>12} {:>14} {:>14}",
        "phi", "|f_0|", "|f_1|", "dsigma_0", "dsigma_1"
    );
    let mut phi = 0.3;
    while phi < PI {
        let f0 = singlet.eval(phi, BlochSum::Symmetrized).unwrap();
        let f1 = triplet.eval(phi, BlochSum::Symmetrized).unwrap();
        println!(
            "{phi:>8.3} {:>12.6} {:>12.6} {:>14.6e} {:>14.6e}",
            f0.norm(),
            f1.norm(),
            f0.norm_sqr() * f0.norm_sqr(),
            f1.norm_sqr() * f1.norm_sqr(),
        );
        phi += 0.35;
    }

    println!("\nexchange symmetry at phi = 1.0:");
    for (series, spin) in [(&singlet, 0), (&triplet, 1)] {
        let a = series.eval(1.0, BlochSum::Symmetrized).unwrap();
        let b = series.eval(1.0 + PI, BlochSum::Symmetrized).unwrap();
        println!(
            "  S = {spin}: f(phi+pi) {} f(phi)  (deviation {:.1e})",
            if spin == 0 { "=" } else { "= -" },
            (b - if spin == 0 { a } else { -a }).norm()
        );
    }
    println!("\nthe cross section |f|^4 is pi-periodic for either spin, so");
    println!("forward and backward scattering cannot be told apart.");
}
