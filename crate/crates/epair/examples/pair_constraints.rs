//! The constrained free electron pair: the propagation frame, the pair
//! wave-function exp(i[k.r - (k.P_hat)(r.P_hat)]), its independence of the
//! longitudinal coordinate, the reduced kinetic energy, and the exchange
//! phase bookkeeping.
//!
//! Run with: cargo run --example pair_constraints

use epair::kinematics::{
    constraint_residuals, exchange_phase, frame_basis, free_planar_mode, laplacian_ratio,
    pair_wave, GridField, PairConfig, SpinChannel,
};
use epair::Complex64;
use std::f64::consts::PI;

fn main() {
    let frame = frame_basis(0.7, 1.2);
    println!("propagation frame at (Theta, Phi) = (0.7, 1.2):");
    for (name, row) in [
        ("e_P", frame.e_p()),
        ("e_Theta", frame.e_theta()),
        ("e_Phi", frame.e_phi()),
    ] {
        println!(
            "  {name:<8} = [{:+.6}, {:+.6}, {:+.6}]",
            row[0], row[1], row[2]
        );
    }

    let p_total = frame.e_p().map(|v| 2.0 * v);
    let k_rel = [1.1, -0.4, 0.8];
    let cfg = |r: [f64; 3]| PairConfig { r, p_total, k_rel };

    // longitudinal shifts leave the wave untouched
    let r0 = [0.8, -0.5, 1.4];
    let w0 = pair_wave(&cfg(r0)).unwrap();
    println!(
        "\npair wave at r = {r0:?}: {:.6}{:+.6}i (|psi| = {:.12})",
        w0.re,
        w0.im,
        w0.norm()
    );
    for shift in [1.0, -4.0] {
        let r = [
            r0[0] + shift * frame.e_p()[0],
            r0[1] + shift * frame.e_p()[1],
            r0[2] + shift * frame.e_p()[2],
        ];
        let w = pair_wave(&cfg(r)).unwrap();
        println!(
            "  shifted {shift:+.1} bohr along P_hat: deviation {:.2e}",
            (w - w0).norm()
        );
    }

    // constraint residuals on a sampled grid
    let field = GridField::sample(
        frame,
        [-2e-4, -5.0, -5.0],
        [1e-4, 0.5, 0.5],
        [5, 21, 21],
        |r| pair_wave(&cfg(r)).unwrap(),
    );
    let (screening, longitudinal) = constraint_residuals(&field).unwrap();
    println!("\nconstraint residuals over a 5x21x21 grid:");
    println!("  max |r_P psi|            = {screening:.3e}  (diagnostic, grid spans 2e-4 bohr)");
    println!("  max |d psi / d r_P|      = {longitudinal:.3e}");

    // reduced kinetic energy from the Laplacian
    let h = 1e-4;
    let stencil = GridField::sample(frame, [-h, -h, -h], [h, h, h], [3, 3, 3], |r| {
        pair_wave(&cfg(r)).unwrap()
    });
    let ratio = laplacian_ratio(&stencil).unwrap();
    let k_dot_p = k_rel[0] * frame.e_p()[0] + k_rel[1] * frame.e_p()[1] + k_rel[2] * frame.e_p()[2];
    let k2 = k_rel.iter().map(|v| v * v).sum::<f64>();
    println!("\nkinetic energy of relative motion:");
    println!("  -Laplacian(psi)/psi = {:.8}", -ratio.re);
    println!("  k^2 - (k.P_hat)^2   = {:.8}", k2 - k_dot_p * k_dot_p);

    // exchange phases and the Bloch condition of the free planar modes
    println!("\nexchange phases for electrons (s = 1/2):");
    for s_total in [0u32, 1] {
        let ph = exchange_phase(s_total, 1).unwrap();
        println!(
            "  S = {s_total}: spatial (-1)^S = {:+}, full (-1)^(2s) = {:+}",
            ph.spatial, ph.full
        );
    }
    let singlet = SpinChannel::new(0, 0).unwrap();
    let triplet = SpinChannel::new(1, 1).unwrap();
    let (k, rho, phi) = (1.0, 2.5, 0.8);
    let m0: Complex64 = free_planar_mode(0, k, rho, phi, &singlet).unwrap();
    let m0s = free_planar_mode(0, k, rho, phi + PI, &singlet).unwrap();
    let m1 = free_planar_mode(1, k, rho, phi, &triplet).unwrap();
    let m1s = free_planar_mode(1, k, rho, phi + PI, &triplet).unwrap();
    println!("\nBloch exchange condition psi(rho, phi + pi) = (-1)^S psi(rho, phi):");
    println!(
        "  Lambda = 0 (singlet): deviation {:.2e}",
        (m0s - m0).norm()
    );
    println!(
        "  Lambda = 1 (triplet): deviation {:.2e}",
        (m1s + m1).norm()
    );
}
