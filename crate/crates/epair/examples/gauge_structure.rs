//! The two-patch U(1) gauge structure on the momentum sphere: patch
//! potentials, their equatorial transition, the monopole field strength
//! recovered by a numerical curl, and flux quantization.
//!
//! Run with: cargo run --example gauge_structure

use epair::monopole::{
    field_strength, gauge_potential, helicity_quantization_check, PatchId, SphericalPoint,
};
use std::f64::consts::PI;

fn main() {
    let lambda = 0.5;
    let p = 1.0;

    println!("patch potentials at p = {p}, Lambda = {lambda} (azimuthal component):");
    println!(
        "{:>8} {:>14} {:>14}",
        "theta", "x_N . phi_hat", "x_S . phi_hat"
    );
    for i in 1..10 {
        let theta = PI * i as f64 / 10.0;
        let pt = SphericalPoint::new(theta, 0.0, p).unwrap();
        let phi_hat = [0.0, 1.0, 0.0];
        let dot = |a: [f64; 3]| a[0] * phi_hat[0] + a[1] * phi_hat[1] + a[2] * phi_hat[2];
        let xn = gauge_potential(&pt, lambda, PatchId::North).map(dot);
        let xs = gauge_potential(&pt, lambda, PatchId::South).map(dot);
        println!(
            "{theta:>8.3} {:>14} {:>14}",
            xn.map_or("singular".into(), |v| format!("{v:.6}")),
            xs.map_or("singular".into(), |v| format!("{v:.6}")),
        );
    }

    // numerical curl of the North potential vs the analytic field strength
    let pt = SphericalPoint::new(1.1, 0.7, p).unwrap();
    let center = pt.cartesian();
    let h = 1e-5;
    let a_at = |q: [f64; 3]| {
        gauge_potential(
            &SphericalPoint::from_cartesian(q).unwrap(),
            lambda,
            PatchId::North,
        )
        .unwrap()
    };
    let mut curl = [0.0f64; 3];
    for (i, j, k) in [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)] {
        let (mut qp, mut qm) = (center, center);
        qp[j] += h;
        qm[j] -= h;
        let djak = (a_at(qp)[k] - a_at(qm)[k]) / (2.0 * h);
        let (mut qp, mut qm) = (center, center);
        qp[k] += h;
        qm[k] -= h;
        let dkaj = (a_at(qp)[j] - a_at(qm)[j]) / (2.0 * h);
        curl[i] = djak - dkaj;
    }
    let f = field_strength(&pt, lambda);
    println!(
        "\ncurl x_N  = [{:+.8}, {:+.8}, {:+.8}]",
        curl[0], curl[1], curl[2]
    );
    println!(
        "analytic F = [{:+.8}, {:+.8}, {:+.8}]   (-Lambda/p^2 p_hat)",
        f[0], f[1], f[2]
    );

    // total flux through the sphere and the quantization rule
    println!("\nflux of F through the sphere is -4 pi Lambda; single-valued");
    println!("transitions need that to be a multiple of 2 pi:");
    for lam in [0.0, 0.3, 0.5, 1.0, 2.5, 3.0] {
        println!(
            "  Lambda = {lam:<4}: flux/2pi = {:+.3}  quantized: {}",
            -2.0 * lam,
            helicity_quantization_check(lam)
        );
    }
}
