//! Quasi-classical planar Kepler scattering of the reduced pair:
//! Laplace-Runge-Lenz machinery, conic orbits, the deflection law
//! b = 1/(k^2 tan(chi/2)), the Rutherford cross section and its
//! symmetrized sum, a trajectory integrator, and a Monte-Carlo
//! cross-section estimator.
//!
//! The reduced Hamiltonian used for the dynamics is H = p^2/2 + 1/rho,
//! under which A = p x l + r_hat is exactly conserved, |A| equals the
//! orbit eccentricity sqrt(1 + k^2 Lambda^2), and the printed deflection
//! chain is self-consistent. The alternative kinetic normalization
//! H = p^2 + 1/rho is exposed through `HamiltonianForm::DoubledKinetic`
//! for inspection; the LRL vector is not conserved under it.

use crate::ode::{self, OdeOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ClassicalError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("LRL vector undefined at the origin")]
    Origin,
    #[error("trajectory failed to escape within the step budget (b = {b}, k = {k})")]
    NonEscape { b: f64, k: f64 },
    #[error("integration failed: {0}")]
    Integration(String),
}

pub type Result<T> = std::result::Result<T, ClassicalError>;

impl From<ode::OdeError> for ClassicalError {
    fn from(e: ode::OdeError) -> Self {
        ClassicalError::Integration(e.to_string())
    }
}

/// Unbound conic orbit of one channel: semi-latus rectum p = Lambda^2,
/// eccentricity e = sqrt(1 + k^2 Lambda^2), closest approach p/(e - 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicOrbit {
    pub p: f64,
    pub e: f64,
    pub rho_min: f64,
}

pub fn orbit_from_channel(lambda: f64, k: f64) -> Result<ConicOrbit> {
    if lambda.is_nan() || lambda <= 0.0 || k.is_nan() || k <= 0.0 {
        return Err(ClassicalError::Domain(format!(
            "orbit needs Lambda > 0 and k > 0, got ({lambda}, {k})"
        )));
    }
    let p = lambda * lambda;
    let e = (1.0 + k * k * lambda * lambda).sqrt();
    Ok(ConicOrbit {
        p,
        e,
        rho_min: p / (e - 1.0),
    })
}

impl ConicOrbit {
    /// Asymptote half-angle: the polar equation p/rho = -1 + e cos(phi)
    /// has solutions for |phi| < phi_max.
    pub fn phi_max(&self) -> f64 {
        (1.0 / self.e).acos()
    }

    /// Radius at azimuth phi (measured from the apse), if on the orbit.
    pub fn rho(&self, phi: f64) -> Option<f64> {
        let denom = self.e * phi.cos() - 1.0;
        (denom > 0.0).then(|| self.p / denom)
    }

    /// n orbit samples (rho, phi) spanning the unbound branch.
    pub fn sample(&self, n: usize) -> Vec<(f64, f64)> {
        let lim = 0.999 * self.phi_max();
        (0..n)
            .map(|i| {
                let phi = -lim + 2.0 * lim * i as f64 / (n - 1).max(1) as f64;
                (self.rho(phi).expect("inside the branch"), phi)
            })
            .collect()
    }
}

/// Planar Laplace-Runge-Lenz vector A = p x l + r_hat for the repulsive
/// unit-charge potential, with l = r x p the scalar angular momentum.
pub fn lrl_vector(r: [f64; 2], p: [f64; 2]) -> Result<[f64; 2]> {
    let rho = (r[0] * r[0] + r[1] * r[1]).sqrt();
    if rho == 0.0 {
        return Err(ClassicalError::Origin);
    }
    let l = r[0] * p[1] - r[1] * p[0];
    Ok([p[1] * l + r[0] / rho, -p[0] * l + r[1] / rho])
}

/// Kinetic normalization of the reduced Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianForm {
    /// H = p^2/2 + 1/rho (conserves the LRL vector; default).
    Reduced,
    /// H = p^2 + 1/rho, as an inspection variant.
    DoubledKinetic,
}

/// Time-ordered samples of one reduced-plane trajectory.
#[derive(Debug, Clone)]
pub struct Trajectory {
    /// (t, position, momentum) at every accepted step.
    pub samples: Vec<(f64, [f64; 2], [f64; 2])>,
    pub b: f64,
    pub k: f64,
    pub r_start: f64,
    /// Deflection angle between asymptotic in/out momenta.
    pub chi: f64,
}

impl Trajectory {
    pub fn energy(&self, form: HamiltonianForm) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(move |(_, r, p)| {
            let ke = p[0] * p[0] + p[1] * p[1];
            let ke = match form {
                HamiltonianForm::Reduced => 0.5 * ke,
                HamiltonianForm::DoubledKinetic => ke,
            };
            ke + 1.0 / (r[0] * r[0] + r[1] * r[1]).sqrt()
        })
    }

    pub fn angular_momentum(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples
            .iter()
            .map(|(_, r, p)| r[0] * p[1] - r[1] * p[0])
    }
}

fn rhs_reduced(_t: f64, y: &[f64; 4]) -> [f64; 4] {
    let rho3 = (y[0] * y[0] + y[1] * y[1]).powf(1.5);
    [y[2], y[3], y[0] / rho3, y[1] / rho3]
}

fn rhs_doubled(_t: f64, y: &[f64; 4]) -> [f64; 4] {
    let rho3 = (y[0] * y[0] + y[1] * y[1]).powf(1.5);
    [2.0 * y[2], 2.0 * y[3], y[0] / rho3, y[1] / rho3]
}

/// Integrate one scattering trajectory from impact parameter b at
/// asymptotic wavenumber k, recording every accepted step. `tol` bounds
/// the relative energy drift along the trajectory.
pub fn integrate_trajectory(b: f64, k: f64, tol: f64) -> Result<Trajectory> {
    integrate_trajectory_with(b, k, tol, HamiltonianForm::Reduced, None)
}

pub fn integrate_trajectory_with(
    b: f64,
    k: f64,
    tol: f64,
    form: HamiltonianForm,
    r_start: Option<f64>,
) -> Result<Trajectory> {
    if b.is_nan() || b < 0.0 || k.is_nan() || k <= 0.0 || tol.is_nan() || tol <= 0.0 {
        return Err(ClassicalError::Domain(format!(
            "need b >= 0, k > 0, tol > 0; got ({b}, {k}, {tol})"
        )));
    }
    let r_start = r_start.unwrap_or(1e3 * b.max(1.0 / (k * k)));
    if b >= r_start {
        return Err(ClassicalError::Domain(format!(
            "impact parameter {b} outside the start radius {r_start}"
        )));
    }
    // place the start state on the true orbit with asymptotic energy and
    // angular momentum l = b k: at finite radius the particle has already
    // climbed part of the potential, so the speed is below k and the
    // perpendicular offset is l / p
    let p_start = match form {
        HamiltonianForm::Reduced => (k * k - 2.0 / r_start).sqrt(),
        HamiltonianForm::DoubledKinetic => (k * k - 1.0 / r_start).sqrt(),
    };
    if !p_start.is_finite() {
        return Err(ClassicalError::Domain(format!(
            "start radius {r_start} is inside the classical turning region"
        )));
    }
    let y_off = b * k / p_start;
    let x0 = (r_start * r_start - y_off * y_off).sqrt();
    let y0 = [x0, y_off, -p_start, 0.0];
    let speed = match form {
        HamiltonianForm::Reduced => k,
        HamiltonianForm::DoubledKinetic => 2.0 * k,
    };
    let t_max = 16.0 * r_start / speed;
    let opts = OdeOptions {
        rtol: (tol * 1e-2).max(5e-14),
        atol: 1e-14,
        h_init: 1e-3 / k,
        max_steps: 10_000_000,
    };
    let rhs: fn(f64, &[f64; 4]) -> [f64; 4] = match form {
        HamiltonianForm::Reduced => rhs_reduced,
        HamiltonianForm::DoubledKinetic => rhs_doubled,
    };
    let mut stepper = ode::Stepper::new(&rhs, 0.0, y0, opts);
    let mut samples = vec![(0.0, [y0[0], y0[1]], [y0[2], y0[3]])];
    loop {
        stepper.step(t_max).map_err(|e| match e {
            ode::OdeError::MaxSteps(_) => ClassicalError::NonEscape { b, k },
            other => ClassicalError::Integration(other.to_string()),
        })?;
        let y = stepper.y;
        samples.push((stepper.t, [y[0], y[1]], [y[2], y[3]]));
        let r2 = y[0] * y[0] + y[1] * y[1];
        let outbound = y[0] * y[2] + y[1] * y[3] > 0.0;
        if outbound && r2 > (0.999 * r_start) * (0.999 * r_start) {
            break;
        }
        if stepper.t >= t_max {
            return Err(ClassicalError::NonEscape { b, k });
        }
    }
    let p_out = samples.last().unwrap().2;
    let chi = deflection_between([-k, 0.0], p_out);
    Ok(Trajectory {
        samples,
        b,
        k,
        r_start,
        chi,
    })
}

fn deflection_between(p_in: [f64; 2], p_out: [f64; 2]) -> f64 {
    let dot = p_in[0] * p_out[0] + p_in[1] * p_out[1];
    let nin = (p_in[0] * p_in[0] + p_in[1] * p_in[1]).sqrt();
    let nout = (p_out[0] * p_out[0] + p_out[1] * p_out[1]).sqrt();
    (dot / (nin * nout)).clamp(-1.0, 1.0).acos()
}

/// Fast deflection-only variant used by the Monte-Carlo estimator.
fn deflection_angle(b: f64, k: f64, rtol: f64, r_start: f64) -> Result<f64> {
    let p_start = (k * k - 2.0 / r_start).sqrt();
    let y_off = b * k / p_start;
    let x0 = (r_start * r_start - y_off * y_off).sqrt();
    let y0 = [x0, y_off, -p_start, 0.0];
    let t_max = 16.0 * r_start / k;
    let opts = OdeOptions {
        rtol,
        atol: 1e-14,
        h_init: 1e-3 / k,
        max_steps: 2_000_000,
    };
    let mut stepper = ode::Stepper::new(&rhs_reduced, 0.0, y0, opts);
    loop {
        stepper.step(t_max).map_err(|e| match e {
            ode::OdeError::MaxSteps(_) => ClassicalError::NonEscape { b, k },
            other => ClassicalError::Integration(other.to_string()),
        })?;
        let y = stepper.y;
        let r2 = y[0] * y[0] + y[1] * y[1];
        if y[0] * y[2] + y[1] * y[3] > 0.0 && r2 > (0.999 * r_start) * (0.999 * r_start) {
            return Ok(deflection_between([-k, 0.0], [y[2], y[3]]));
        }
        if stepper.t >= t_max {
            return Err(ClassicalError::NonEscape { b, k });
        }
    }
}

/// Impact parameter from the deflection angle: b = 1/(k^2 tan(chi/2)).
pub fn impact_from_angle(chi: f64, k: f64) -> Result<f64> {
    if chi.is_nan() || chi <= 0.0 || chi >= PI {
        return Err(ClassicalError::Domain(format!(
            "deflection must lie strictly inside (0, pi), got {chi}"
        )));
    }
    if k.is_nan() || k <= 0.0 {
        return Err(ClassicalError::Domain(format!(
            "k must be positive, got {k}"
        )));
    }
    Ok(1.0 / (k * k * (chi / 2.0).tan()))
}

/// Rutherford cross section 1/(4 k^4 sin^4(chi/2)), plus the reflected
/// cos^-4 term when `symmetrized` (identical particles cannot tell
/// forward from backward).
pub fn rutherford(chi: f64, k: f64, symmetrized: bool) -> Result<f64> {
    if chi.is_nan() || chi <= 0.0 || chi >= PI {
        return Err(ClassicalError::Domain(format!(
            "deflection must lie strictly inside (0, pi), got {chi}"
        )));
    }
    if k.is_nan() || k <= 0.0 {
        return Err(ClassicalError::Domain(format!(
            "k must be positive, got {k}"
        )));
    }
    let k4 = k.powi(4);
    let s = (chi / 2.0).sin().powi(4);
    let mut v = 1.0 / (4.0 * k4 * s);
    if symmetrized {
        let c = (chi / 2.0).cos().powi(4);
        v += 1.0 / (4.0 * k4 * c);
    }
    Ok(v)
}

/// Monte-Carlo estimate of d sigma/d Omega binned in the deflection angle.
#[derive(Debug, Clone, PartialEq)]
pub struct McHistogram {
    pub k: f64,
    pub b_max: f64,
    pub seed: u64,
    pub n_samples: usize,
    /// Trajectories that failed to escape; excluded from the bins.
    pub n_failed: usize,
    /// bins + 1 edges spanning (0, pi).
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
    /// dsigma/dOmega per bin (bohr^2 / sr).
    pub dsigma: Vec<f64>,
    /// One-sigma Poisson error on dsigma.
    pub std_err: Vec<f64>,
}

/// Sample impact parameters uniformly in b^2 over (0, b_max^2], integrate
/// each trajectory, and bin the deflection angles. Deterministic for a
/// given seed regardless of worker count: each sample owns a counter-mode
/// RNG stream derived from (seed, index).
pub fn mc_cross_section(
    k: f64,
    b_max: f64,
    n_samples: usize,
    bins: usize,
    seed: u64,
) -> Result<McHistogram> {
    if k.is_nan() || k <= 0.0 || b_max.is_nan() || b_max <= 0.0 || bins == 0 {
        return Err(ClassicalError::Domain(format!(
            "need k > 0, b_max > 0, bins >= 1; got ({k}, {b_max}, {bins})"
        )));
    }
    if n_samples < 10_000 {
        return Err(ClassicalError::Domain(format!(
            "estimator needs at least 1e4 samples, got {n_samples}"
        )));
    }
    let r_start = (30.0 * b_max.max(1.0 / (k * k))).max(50.0);
    let chis: Vec<Option<f64>> = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let u: f64 = 1.0 - rng.gen::<f64>(); // u in (0, 1]
            let b = b_max * u.sqrt();
            deflection_angle(b, k, 1e-9, r_start).ok()
        })
        .collect();

    let mut counts = vec![0u64; bins];
    let mut n_failed = 0usize;
    for chi in &chis {
        match chi {
            Some(chi) => {
                let idx = ((chi / PI) * bins as f64) as usize;
                counts[idx.min(bins - 1)] += 1;
            }
            None => n_failed += 1,
        }
    }
    let bin_edges: Vec<f64> = (0..=bins).map(|i| PI * i as f64 / bins as f64).collect();
    // each sample carries cross-section weight pi b_max^2 / n; a bin of
    // width (lo, hi) covers solid angle 2 pi (cos lo - cos hi)
    let w = PI * b_max * b_max / n_samples as f64;
    let mut dsigma = Vec::with_capacity(bins);
    let mut std_err = Vec::with_capacity(bins);
    for i in 0..bins {
        let d_omega = 2.0 * PI * (bin_edges[i].cos() - bin_edges[i + 1].cos());
        dsigma.push(counts[i] as f64 * w / d_omega);
        std_err.push((counts[i] as f64).sqrt() * w / d_omega);
    }
    Ok(McHistogram {
        k,
        b_max,
        seed,
        n_samples,
        n_failed,
        bin_edges,
        counts,
        dsigma,
        std_err,
    })
}
