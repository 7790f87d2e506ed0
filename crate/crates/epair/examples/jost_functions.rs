//! Jost functions of the planar Coulomb problem and the S-matrix built
//! from their ratio: conjugation symmetry, unit modulus, and agreement of
//! arg(f-/f+) with twice the phase shift.
//!
//! Run with: cargo run --example jost_functions

use epair::scatter::{jost_function, phase_shift, s_matrix, JostSign};

fn main() {
    println!(
        "{:>7} {:>6} {:>26} {:>12} {:>12} {:>12}",
        "Lambda", "k", "f(+)", "|S|", "arg S", "2 delta"
    );
    for lam in 0..4u32 {
        for &k in &[0.5, 1.0, 2.0] {
            let fp = jost_function(JostSign::Plus, lam, k).unwrap();
            let fm = jost_function(JostSign::Minus, lam, k).unwrap();
            assert!(
                (fm - fp.conj()).norm() < 1e-12 * fp.norm(),
                "f(-) = conj f(+)"
            );
            let s = fm / fp;
            let delta = phase_shift(lam, k).unwrap();
            println!(
                "{lam:>7} {k:>6.2} {:>26} {:>12.9} {:>12.7} {:>12.7}",
                format!("{:.5}{:+.5}i", fp.re, fp.im),
                s.norm(),
                s.arg(),
                principal(2.0 * delta),
            );
            let closed = s_matrix(lam, k).unwrap();
            assert!((s - closed).norm() < 1e-12, "ratio equals exp(2 i delta)");
        }
    }
    println!();
    println!("the S-matrix is the Jost ratio f(-)/f(+) = exp(2 i delta_Lambda).");
}

fn principal(x: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut y = x.rem_euclid(two_pi);
    if y > std::f64::consts::PI {
        y -= two_pi;
    }
    y
}
