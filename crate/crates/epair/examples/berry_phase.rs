//! Berry phases on the momentum sphere: the equatorial circle picks up
//! Lambda times the enclosed solid angle, and a boost-composition
//! triangle reproduces the l'Huilier solid angle of its geodesic hull.
//!
//! Run with: cargo run --example berry_phase

use epair::monopole::{berry_phase, SphericalPoint};
use std::f64::consts::PI;

fn circle(theta: f64, n: usize) -> Vec<SphericalPoint> {
    (0..=n)
        .map(|i| SphericalPoint::new(theta, 2.0 * PI * (i % n) as f64 / n as f64, 1.0).unwrap())
        .collect()
}

fn main() {
    println!("latitude circles (increasing phi), gamma = Lambda * solid angle mod 2 pi");
    println!("(loop vertices are joined by geodesic arcs, so a coarse polygon");
    println!(" slightly under-fills the smooth cap; 4096 vertices here)");
    println!(
        "{:>8} {:>8} {:>14} {:>14} {:>12}",
        "theta", "Lambda", "gamma", "cap value", "circ dist"
    );
    for &theta in &[PI / 3.0, PI / 2.0, 2.0 * PI / 3.0] {
        for &lambda in &[0.5, 1.0] {
            let gamma = berry_phase(&circle(theta, 4096), lambda).unwrap();
            // southern-cap solid angle seen with the clockwise-positive convention
            let expected = (lambda * 2.0 * PI * (1.0 + theta.cos())).rem_euclid(2.0 * PI);
            let d = (gamma - expected).abs();
            let circ = d.min(2.0 * PI - d);
            println!("{theta:>8.3} {lambda:>8.1} {gamma:>14.9} {expected:>14.9} {circ:>12.2e}");
        }
    }

    // boost-composition triangle: p, p - v1, p - v1 - v2 on one sphere
    let p = [0.2f64, 0.1, 1.2];
    let v1 = [0.6f64, 0.0, 0.3];
    let v2 = [-0.1f64, 0.5, 0.2];
    let radius = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    let proj = |v: [f64; 3]| {
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        SphericalPoint::from_cartesian([v[0] / n * radius, v[1] / n * radius, v[2] / n * radius])
            .unwrap()
    };
    let a = proj(p);
    let b = proj([p[0] - v1[0], p[1] - v1[1], p[2] - v1[2]]);
    let c = proj([
        p[0] - v1[0] - v2[0],
        p[1] - v1[1] - v2[1],
        p[2] - v1[2] - v2[2],
    ]);
    println!("\nboost-composition triangle (two successive boosts):");
    for &lambda in &[0.5, 1.0, 1.5] {
        let gamma = berry_phase(&[a, b, c, a], lambda).unwrap();
        println!("  Lambda = {lambda}: composition phase = {gamma:.9} rad");
    }
    println!("(equals Lambda times the solid angle subtended by the triangle;");
    println!(" associativity of three boosts forces 2 Lambda to be an integer)");

    // a degenerate out-and-back path encloses nothing
    let d = berry_phase(&[a, b, a], 0.5).unwrap();
    println!("\ndegenerate out-and-back loop: gamma = {d:.2e} (zero area)");
}
