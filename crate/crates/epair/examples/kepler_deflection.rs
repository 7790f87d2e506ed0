//! Quasi-classical scattering of the reduced pair: hyperbolic Kepler
//! orbits, conservation of the Laplace-Runge-Lenz vector along integrated
//! trajectories, and the closure of the deflection law
//! b = 1/(k^2 tan(chi/2)).
//!
//! Run with: cargo run --example kepler_deflection

use epair::classical::{
    impact_from_angle, integrate_trajectory, lrl_vector, orbit_from_channel, rutherford,
};
use std::f64::consts::PI;

fn main() {
    // orbit constants for a few channels
    println!("conic orbits (semi-latus p = Lambda^2, e = sqrt(1 + k^2 Lambda^2)):");
    println!(
        "{:>8} {:>6} {:>10} {:>10} {:>10}",
        "Lambda", "k", "p", "e", "rho_min"
    );
    for &(lambda, k) in &[(0.5, 1.0), (1.0, 1.0), (2.0, 0.5), (3.0, 2.0)] {
        let o = orbit_from_channel(lambda, k).unwrap();
        println!(
            "{lambda:>8.1} {k:>6.1} {:>10.4} {:>10.6} {:>10.4}",
            o.p, o.e, o.rho_min
        );
    }

    // LRL conservation along one integrated trajectory
    let (b, k) = (1.0, 1.0);
    let t = integrate_trajectory(b, k, 1e-10).unwrap();
    let first = t.samples.first().unwrap();
    let last = t.samples.last().unwrap();
    let a_in = lrl_vector(first.1, first.2).unwrap();
    let a_out = lrl_vector(last.1, last.2).unwrap();
    let orbit = orbit_from_channel(b * k, k).unwrap();
    println!("\ntrajectory b = {b}, k = {k} ({} steps):", t.samples.len());
    println!("  A at entry = [{:+.10}, {:+.10}]", a_in[0], a_in[1]);
    println!("  A at exit  = [{:+.10}, {:+.10}]", a_out[0], a_out[1]);
    println!(
        "  |A| = {:.10} vs orbit eccentricity {:.10}",
        (a_in[0].powi(2) + a_in[1].powi(2)).sqrt(),
        orbit.e
    );
    println!(
        "  deflection chi = {:.8} rad (expect pi/2 = {:.8})",
        t.chi,
        PI / 2.0
    );

    // closure of the deflection law over a chi grid
    println!("\ndeflection closure b(chi) -> trajectory -> chi, k = 1:");
    println!(
        "{:>10} {:>10} {:>14} {:>12} {:>14}",
        "chi in", "b(chi)", "chi recovered", "|error|", "dsigma/dOmega"
    );
    for i in 1..=9 {
        let chi = PI * i as f64 / 10.0;
        let b = impact_from_angle(chi, 1.0).unwrap();
        let t = integrate_trajectory(b, 1.0, 1e-10).unwrap();
        println!(
            "{chi:>10.5} {b:>10.5} {:>14.8} {:>12.2e} {:>14.6}",
            t.chi,
            (t.chi - chi).abs(),
            rutherford(chi, 1.0, true).unwrap(),
        );
    }
    println!("\n(the cross-section column is the symmetrized Rutherford value,");
    println!(" invariant under chi -> pi - chi for identical particles)");
}
