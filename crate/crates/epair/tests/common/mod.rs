//! Shared oracles for the integration tests. Everything in here is kept
//! deliberately independent of the library's own evaluation paths: the
//! gamma oracle is the Euler product limit, the solid angle comes from
//! l'Huilier's theorem, spherical harmonics from the associated-Legendre
//! recurrence, and the angular operators are applied by finite differences.
#![allow(dead_code)]

use epair::monopole::{self, MonopoleState, PatchId, SphericalPoint};
use epair::Complex64;
use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[i] = -x.abs();
        nodes[n - 1 - i] = x.abs();
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for m in 2..=n {
        let mf = m as f64;
        let p2 = ((2.0 * mf - 1.0) * x * p1 - (mf - 1.0) * p0) / mf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Euler product-limit evaluation of Gamma(z):
/// Gamma(z) = lim n! n^z / (z (z+1) ... (z+n)), accelerated by one
/// Richardson step (evaluations at n and 2n).
pub fn gamma_product_series(z: Complex64, n: usize) -> Complex64 {
    let g_n = log_gamma_product(z, n);
    let g_2n = log_gamma_product(z, 2 * n);
    (2.0 * g_2n - g_n).exp()
}

fn log_gamma_product(z: Complex64, n: usize) -> Complex64 {
    // log of n! n^z / (z (z+1) ... (z+n)) arranged term by term as
    // -ln z + z ln n - sum ln(1 + z/m), which keeps every partial sum
    // small (no cancellation of large factorial logs)
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 1..=n {
        sum -= (Complex64::new(1.0, 0.0) + z / m as f64).ln();
    }
    sum - z.ln() + z * (n as f64).ln()
}

/// Signed solid angle of the geodesic polygon with the given unit-sphere
/// vertices (not closed; consecutive vertices joined by great-circle
/// arcs). Positive for counterclockwise traversal seen from outside.
/// Fan-triangulated from the first vertex; each triangle's magnitude from
/// l'Huilier's theorem, its sign from the orientation determinant.
pub fn signed_solid_angle(vertices: &[[f64; 3]]) -> f64 {
    let mut total = 0.0;
    for i in 1..vertices.len() - 1 {
        total += signed_triangle_solid_angle(vertices[0], vertices[i], vertices[i + 1]);
    }
    total
}

fn signed_triangle_solid_angle(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    let (na, nb, nc) = (normalize(a), normalize(b), normalize(c));
    // arc lengths of the sides
    let alpha = angle_between(nb, nc);
    let beta = angle_between(na, nc);
    let gamma = angle_between(na, nb);
    let s = 0.5 * (alpha + beta + gamma);
    let t = (s / 2.0).tan()
        * ((s - alpha) / 2.0).tan()
        * ((s - beta) / 2.0).tan()
        * ((s - gamma) / 2.0).tan();
    let excess = 4.0 * t.max(0.0).sqrt().atan();
    let det = na[0] * (nb[1] * nc[2] - nb[2] * nc[1]) - na[1] * (nb[0] * nc[2] - nb[2] * nc[0])
        + na[2] * (nb[0] * nc[1] - nb[1] * nc[0]);
    if det >= 0.0 {
        excess
    } else {
        -excess
    }
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn angle_between(a: [f64; 3], b: [f64; 3]) -> f64 {
    (a[0] * b[0] + a[1] * b[1] + a[2] * b[2])
        .clamp(-1.0, 1.0)
        .acos()
}

/// Associated Legendre P_l^m(x) for m >= 0 (Condon-Shortley phase).
pub fn assoc_legendre(l: u32, m: u32, x: f64) -> f64 {
    let mut pmm = 1.0;
    if m > 0 {
        let somx2 = ((1.0 - x) * (1.0 + x)).sqrt();
        let mut fact = 1.0;
        for _ in 0..m {
            pmm *= -fact * somx2;
            fact += 2.0;
        }
    }
    if l == m {
        return pmm;
    }
    let mut pmmp1 = x * (2.0 * m as f64 + 1.0) * pmm;
    if l == m + 1 {
        return pmmp1;
    }
    for ll in (m + 2)..=l {
        let llf = ll as f64;
        let mf = m as f64;
        let p = (x * (2.0 * llf - 1.0) * pmmp1 - (llf + mf - 1.0) * pmm) / (llf - mf);
        pmm = pmmp1;
        pmmp1 = p;
    }
    pmmp1
}

/// Conventional spherical harmonic Y_lm(theta, phi).
pub fn std_spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Complex64 {
    let ma = m.unsigned_abs();
    let mut ln_ratio = 0.0;
    for i in (l - ma + 1)..=(l + ma) {
        ln_ratio += (i as f64).ln();
    }
    let norm = ((2.0 * l as f64 + 1.0) / (4.0 * PI) * (-ln_ratio).exp()).sqrt();
    let plm = assoc_legendre(l, ma, theta.cos());
    let y = norm * plm * Complex64::from_polar(1.0, ma as f64 * phi);
    if m >= 0 {
        y
    } else {
        let sign = if ma.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * y.conj()
    }
}

/// Finite-difference application of the covariant l^2 operator to the
/// sectional harmonic at (theta, phi) on the chosen patch.
///
/// l^2 = -(1/sin^2) [ sin th d_th (sin th d_th .) + (d_phi + i a(th))^2 ] + Lambda^2,
/// with a = Lambda (cos th - 1) on the North patch and
/// a = Lambda (cos th + 1) on the South patch.
pub fn l2_apply(state: &MonopoleState, theta: f64, phi: f64, h: f64, patch: PatchId) -> Complex64 {
    let y = |th: f64, ph: f64| -> Complex64 {
        let pt = SphericalPoint::new(th, ph.rem_euclid(2.0 * PI), 1.0).unwrap();
        monopole::harmonic(state, &pt, patch).unwrap()
    };
    let lambda = state.lambda();
    let st = theta.sin();
    let y0 = y(theta, phi);

    // colatitude part, already carrying its 1/sin^2 factor:
    // sin th d_th(sin th d_th Y) / sin^2 th = d_th(sin th d_th Y) / sin th
    let dth = |th: f64| (y(th + h, phi) - y(th - h, phi)) / (2.0 * h);
    let g_plus = (theta + h).sin() * dth(theta + h);
    let g_minus = (theta - h).sin() * dth(theta - h);
    let theta_part = (g_plus - g_minus) / (2.0 * h * st);

    // azimuthal covariant part
    let a = match patch {
        PatchId::North => lambda * (theta.cos() - 1.0),
        PatchId::South => lambda * (theta.cos() + 1.0),
    };
    let dphi = (y(theta, phi + h) - y(theta, phi - h)) / (2.0 * h);
    let d2phi = (y(theta, phi + h) - 2.0 * y0 + y(theta, phi - h)) / (h * h);
    let i = Complex64::new(0.0, 1.0);
    let phi_part = d2phi + 2.0 * i * a * dphi - a * a * y0;

    -theta_part - phi_part / (st * st) + lambda * lambda * y0
}

/// Finite-difference l_z = -i d_phi -+ Lambda (North/South) applied to the
/// sectional harmonic; eigenvalue is m on either patch.
pub fn lz_apply(state: &MonopoleState, theta: f64, phi: f64, h: f64, patch: PatchId) -> Complex64 {
    let y = |ph: f64| -> Complex64 {
        let pt = SphericalPoint::new(theta, ph.rem_euclid(2.0 * PI), 1.0).unwrap();
        monopole::harmonic(state, &pt, patch).unwrap()
    };
    let dphi = (y(phi + h) - y(phi - h)) / (2.0 * h);
    let i = Complex64::new(0.0, 1.0);
    let lam_sign = match patch {
        PatchId::North => -state.lambda(),
        PatchId::South => state.lambda(),
    };
    -i * dphi + lam_sign * y(phi)
}

/// All valid (2l, 2m, 2Lambda) states with two_l <= max_two_l.
pub fn all_states(max_two_l: i32) -> Vec<MonopoleState> {
    let mut out = Vec::new();
    for two_l in 0..=max_two_l {
        for two_m in (-two_l..=two_l).step_by(2) {
            for two_lambda in (-two_l..=two_l).step_by(2) {
                out.push(MonopoleState::new(two_l, two_m, two_lambda).unwrap());
            }
        }
    }
    out
}
