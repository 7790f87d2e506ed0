//! Sectional monopole harmonics and the induced U(1) gauge structure on
//! the momentum sphere: two-patch potentials, transition function, field
//! strength, Berry phases, helicity quantization.
//!
//! Conventions. North sections carry azimuthal dependence
//! `exp(i (Lambda + m) phi)` and are related to South sections by the
//! transition factor `Y_S = exp(-2 i Lambda phi) Y_N`. The z-rotation
//! generator acting on North sections is `l_z = -i d/dphi - Lambda`
//! (equivalently `-i d/dphi + Lambda` on South sections), with eigenvalue
//! m. Left-handed states (Lambda < 0) are complex conjugates of the
//! right-handed ones with m negated. Normalization is unit L2 norm over
//! the sphere with the sign fixed nonnegative at the first reference
//! colatitude (pi/2, then fallbacks) where the section does not vanish.

use crate::specfun::{jacobi_p, ln_factorial};
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

/// Half-width of the equatorial overlap band shared by the two patches.
pub const OVERLAP_EPS: f64 = 0.2;

#[derive(Debug, Error, PartialEq)]
pub enum MonopoleError {
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("theta = {theta} outside the {patch:?} patch domain")]
    PatchDomain { patch: PatchId, theta: f64 },
    #[error("theta = {theta} within 1e-8 of the excluded pole of {patch:?}")]
    PoleSingularity { patch: PatchId, theta: f64 },
    #[error("loop is not closed (first and last points differ)")]
    OpenLoop,
    #[error("loop points do not lie on a single sphere")]
    NonSphericalLoop,
    #[error("loop passes within 1e-6 of a coordinate pole")]
    PoleCrossing,
}

pub type Result<T> = std::result::Result<T, MonopoleError>;

/// Gauge patch on the momentum sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatchId {
    North,
    South,
}

impl PatchId {
    /// Colatitude range covered by this patch.
    pub fn contains(self, theta: f64) -> bool {
        match self {
            PatchId::North => (0.0..(PI + OVERLAP_EPS) / 2.0).contains(&theta),
            PatchId::South => theta > (PI - OVERLAP_EPS) / 2.0 && theta <= PI,
        }
    }

    fn excluded_pole(self) -> f64 {
        match self {
            PatchId::North => PI,
            PatchId::South => 0.0,
        }
    }
}

/// Point on the momentum sphere: colatitude, azimuth, radial magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub theta: f64,
    pub phi: f64,
    pub p: f64,
}

impl SphericalPoint {
    pub fn new(theta: f64, phi: f64, p: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) || !(0.0..2.0 * PI).contains(&phi) || p.is_nan() || p <= 0.0
        {
            return Err(MonopoleError::InvalidPoint(format!(
                "(theta, phi, p) = ({theta}, {phi}, {p})"
            )));
        }
        Ok(SphericalPoint { theta, phi, p })
    }

    pub fn unit(self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }

    pub fn cartesian(self) -> [f64; 3] {
        let u = self.unit();
        [u[0] * self.p, u[1] * self.p, u[2] * self.p]
    }

    pub fn from_cartesian(v: [f64; 3]) -> Result<Self> {
        let p = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if p == 0.0 {
            return Err(MonopoleError::InvalidPoint("zero vector".into()));
        }
        let theta = (v[2] / p).clamp(-1.0, 1.0).acos();
        let mut phi = v[1].atan2(v[0]);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        SphericalPoint::new(theta, phi, p)
    }
}

/// Angular-momentum labels of a monopole harmonic, stored as doubled
/// integers so half-integer states are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonopoleState {
    two_l: i32,
    two_m: i32,
    two_lambda: i32,
}

impl MonopoleState {
    pub fn new(two_l: i32, two_m: i32, two_lambda: i32) -> Result<Self> {
        if two_l < 0
            || two_m.abs() > two_l
            || two_lambda.abs() > two_l
            || (two_l - two_m) % 2 != 0
            || (two_l - two_lambda) % 2 != 0
        {
            return Err(MonopoleError::InvalidState(format!(
                "(2l, 2m, 2Lambda) = ({two_l}, {two_m}, {two_lambda})"
            )));
        }
        Ok(MonopoleState {
            two_l,
            two_m,
            two_lambda,
        })
    }

    pub fn l(&self) -> f64 {
        self.two_l as f64 / 2.0
    }
    pub fn m(&self) -> f64 {
        self.two_m as f64 / 2.0
    }
    pub fn lambda(&self) -> f64 {
        self.two_lambda as f64 / 2.0
    }
    pub fn two_l(&self) -> i32 {
        self.two_l
    }
    pub fn two_m(&self) -> i32 {
        self.two_m
    }
    pub fn two_lambda(&self) -> i32 {
        self.two_lambda
    }
}

fn ln_binomial(n: i32, k: i32) -> f64 {
    ln_factorial(n as u32) - ln_factorial(k as u32) - ln_factorial((n - k) as u32)
}

/// Wigner small-d matrix element d^j_{m1, m2}(theta), via the Jacobi
/// polynomial representation picked at the corner where both exponents
/// are nonnegative. Arguments are doubled (2j, 2m1, 2m2).
pub fn wigner_small_d(two_j: i32, two_m1: i32, two_m2: i32, theta: f64) -> f64 {
    let jpm2 = (two_j + two_m2) / 2;
    let jmm2 = (two_j - two_m2) / 2;
    let jpm1 = (two_j + two_m1) / 2;
    let jmm1 = (two_j - two_m1) / 2;
    let k = jpm2.min(jmm2).min(jpm1).min(jmm1);
    let (a, sign_exp) = if k == jpm2 || k == jmm1 {
        ((two_m1 - two_m2) / 2, (two_m1 - two_m2) / 2)
    } else {
        ((two_m2 - two_m1) / 2, 0)
    };
    let b = two_j - 2 * k - a;
    let sign = if sign_exp % 2 == 0 { 1.0 } else { -1.0 };
    let ln_pref = 0.5 * (ln_binomial(two_j - k, k + a) - ln_binomial(k + b, b));
    sign * ln_pref.exp()
        * (theta / 2.0).sin().powi(a)
        * (theta / 2.0).cos().powi(b)
        * jacobi_p(k as u32, a as f64, b as f64, theta.cos())
}

/// Colatitude profile of the harmonic: d^l_{Lambda, -m}(theta), for
/// right-handed (Lambda >= 0) states.
fn theta_profile(state: &MonopoleState, theta: f64) -> f64 {
    wigner_small_d(state.two_l, state.two_lambda, -state.two_m, theta)
}

/// Sign convention: nonnegative value at the first reference colatitude
/// where the profile is not (numerically) a node.
fn norm_sign(state: &MonopoleState) -> f64 {
    for theta_ref in [PI / 2.0, PI / 3.0, 2.0 * PI / 5.0, PI / 4.0, 1.0, 0.7, 2.2] {
        let v = theta_profile(state, theta_ref);
        if v.abs() > 1e-8 {
            return if v >= 0.0 { 1.0 } else { -1.0 };
        }
    }
    1.0
}

/// Sectional monopole harmonic Y_{l m Lambda}(theta, phi) on the chosen
/// patch, unit L2 norm over the sphere.
pub fn harmonic(state: &MonopoleState, pt: &SphericalPoint, patch: PatchId) -> Result<Complex64> {
    if !patch.contains(pt.theta) {
        return Err(MonopoleError::PatchDomain {
            patch,
            theta: pt.theta,
        });
    }
    if state.two_lambda < 0 {
        let mirror = MonopoleState::new(state.two_l, -state.two_m, -state.two_lambda)?;
        return Ok(harmonic(&mirror, pt, patch)?.conj());
    }
    let norm = norm_sign(state) * ((state.two_l as f64 + 1.0) / (4.0 * PI)).sqrt();
    let d = theta_profile(state, pt.theta);
    // North: exp(i (Lambda + m) phi); South differs by exp(-2 i Lambda phi)
    let two_winding = match patch {
        PatchId::North => state.two_lambda + state.two_m,
        PatchId::South => state.two_m - state.two_lambda,
    };
    let phase = Complex64::from_polar(1.0, 0.5 * two_winding as f64 * pt.phi);
    Ok(norm * d * phase)
}

/// Patch gauge potential, in Cartesian momentum components (units 1/p).
///
/// x_N = -(Lambda/p) tan(theta/2) phi_hat, x_S = (Lambda/p) cot(theta/2) phi_hat.
pub fn gauge_potential(pt: &SphericalPoint, lambda: f64, patch: PatchId) -> Result<[f64; 3]> {
    let dist_to_pole = (pt.theta - patch.excluded_pole()).abs();
    if dist_to_pole < 1e-8 {
        return Err(MonopoleError::PoleSingularity {
            patch,
            theta: pt.theta,
        });
    }
    let magnitude = match patch {
        PatchId::North => -(lambda / pt.p) * (pt.theta / 2.0).tan(),
        PatchId::South => (lambda / pt.p) / (pt.theta / 2.0).tan(),
    };
    let (sp, cp) = (pt.phi.sin(), pt.phi.cos());
    Ok([-magnitude * sp, magnitude * cp, 0.0])
}

/// Monopole field strength F = -(Lambda/p^2) p_hat, Cartesian components.
pub fn field_strength(pt: &SphericalPoint, lambda: f64) -> [f64; 3] {
    let u = pt.unit();
    let f = -lambda / (pt.p * pt.p);
    [f * u[0], f * u[1], f * u[2]]
}

/// True iff the total sphere flux -4 pi Lambda is a multiple of 2 pi,
/// i.e. iff 2 Lambda is an integer.
pub fn helicity_quantization_check(lambda: f64) -> bool {
    let t = 2.0 * lambda;
    (t - t.round()).abs() < 1e-9
}

/// Berry phase of a closed loop on one momentum sphere, mod 2 pi in
/// [0, 2 pi).
///
/// The discrete line integral of the patch potentials is accumulated along
/// geodesic arcs (two-point Gauss per sub-arc), switching patch inside the
/// overlap band with the transition correction +/- 2 Lambda phi at each
/// switch. Equals Lambda times the signed solid angle enclosed (clockwise
/// seen from outside positive; equivalently -Lambda times the
/// counterclockwise solid angle) mod 2 pi.
pub fn berry_phase(loop_points: &[SphericalPoint], lambda: f64) -> Result<f64> {
    berry_phase_impl(loop_points, lambda, None)
}

/// Berry phase accumulated with a single patch potential only; the loop
/// must stay inside that patch's domain.
pub fn berry_phase_in_patch(
    loop_points: &[SphericalPoint],
    lambda: f64,
    patch: PatchId,
) -> Result<f64> {
    berry_phase_impl(loop_points, lambda, Some(patch))
}

fn berry_phase_impl(
    loop_points: &[SphericalPoint],
    lambda: f64,
    forced_patch: Option<PatchId>,
) -> Result<f64> {
    if loop_points.len() < 2 {
        return Err(MonopoleError::OpenLoop);
    }
    let p0 = loop_points[0].p;
    for pt in loop_points {
        if (pt.p - p0).abs() > 1e-9 * p0 {
            return Err(MonopoleError::NonSphericalLoop);
        }
        if pt.theta < 1e-6 || pt.theta > PI - 1e-6 {
            return Err(MonopoleError::PoleCrossing);
        }
    }
    let first = loop_points[0].cartesian();
    let last = loop_points[loop_points.len() - 1].cartesian();
    if dist(first, last) > 1e-9 * p0 {
        return Err(MonopoleError::OpenLoop);
    }

    let mut patch = forced_patch.unwrap_or(if loop_points[0].theta <= PI / 2.0 {
        PatchId::North
    } else {
        PatchId::South
    });
    let mut gamma = 0.0;
    // 2-pt Gauss nodes on [0, 1]
    let gauss = [
        (0.5 - 0.5 / 3.0_f64.sqrt(), 0.5),
        (0.5 + 0.5 / 3.0_f64.sqrt(), 0.5),
    ];
    for pair in loop_points.windows(2) {
        let v0 = pair[0].cartesian();
        let v1 = pair[1].cartesian();
        let omega = arc_angle(v0, v1, p0);
        if omega < 1e-15 {
            continue;
        }
        let n_sub = ((omega / 0.01).ceil() as usize).max(4);
        for s in 0..n_sub {
            let t0 = s as f64 / n_sub as f64;
            let t1 = (s + 1) as f64 / n_sub as f64;
            // patch management at the sub-arc start
            let q_start = slerp(v0, v1, omega, t0, p0);
            let sp_start = SphericalPoint::from_cartesian(q_start)?;
            match forced_patch {
                Some(p) => {
                    if !p.contains(sp_start.theta) {
                        return Err(MonopoleError::PatchDomain {
                            patch: p,
                            theta: sp_start.theta,
                        });
                    }
                }
                None => {
                    // hysteresis switch inside the overlap band
                    if patch == PatchId::North && sp_start.theta > PI / 2.0 + OVERLAP_EPS / 4.0 {
                        patch = PatchId::South;
                        gamma += 2.0 * lambda * sp_start.phi;
                    } else if patch == PatchId::South
                        && sp_start.theta < PI / 2.0 - OVERLAP_EPS / 4.0
                    {
                        patch = PatchId::North;
                        gamma -= 2.0 * lambda * sp_start.phi;
                    }
                }
            }
            for (node, weight) in gauss {
                let t = t0 + (t1 - t0) * node;
                let q = slerp(v0, v1, omega, t, p0);
                let dq = slerp_derivative(v0, v1, omega, t, p0);
                let sp = SphericalPoint::from_cartesian(q)?;
                let a = gauge_potential(&sp, lambda, patch)?;
                let dt = t1 - t0;
                gamma += weight * dt * (a[0] * dq[0] + a[1] * dq[1] + a[2] * dq[2]);
            }
        }
    }
    Ok(gamma.rem_euclid(2.0 * PI))
}

fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

fn arc_angle(a: [f64; 3], b: [f64; 3], p: f64) -> f64 {
    let dot = (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) / (p * p);
    dot.clamp(-1.0, 1.0).acos()
}

/// Great-circle interpolation between points of common radius p.
fn slerp(a: [f64; 3], b: [f64; 3], omega: f64, t: f64, _p: f64) -> [f64; 3] {
    if omega < 1e-12 {
        return a;
    }
    let (wa, wb) = (
        ((1.0 - t) * omega).sin() / omega.sin(),
        (t * omega).sin() / omega.sin(),
    );
    [
        wa * a[0] + wb * b[0],
        wa * a[1] + wb * b[1],
        wa * a[2] + wb * b[2],
    ]
}

fn slerp_derivative(a: [f64; 3], b: [f64; 3], omega: f64, t: f64, _p: f64) -> [f64; 3] {
    if omega < 1e-12 {
        return [0.0; 3];
    }
    let (wa, wb) = (
        -omega * ((1.0 - t) * omega).cos() / omega.sin(),
        omega * (t * omega).cos() / omega.sin(),
    );
    [
        wa * a[0] + wb * b[0],
        wa * a[1] + wb * b[1],
        wa * a[2] + wb * b[2],
    ]
}
