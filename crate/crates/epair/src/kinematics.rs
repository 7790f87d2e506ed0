//! Constrained two-free-electron reduction: propagation-frame rotation,
//! cylindrical coordinates, constrained pair wave-function, constraint
//! residuals, exchange and Bloch phase rules.

use crate::specfun::{self, bessel_j};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum KinematicsError {
    /// The propagation direction is undefined for |P| = 0.
    #[error("zero total momentum: propagation direction undefined")]
    ZeroPropagation,
    #[error("grid needs at least {needed} points along axis {axis}, has {got}")]
    GridTooSmall {
        axis: usize,
        needed: usize,
        got: usize,
    },
    #[error("helicity {lambda} and total spin {spin} have different parity")]
    Parity { lambda: u32, spin: u32 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    SpecFun(#[from] specfun::SpecFunError),
}

pub type Result<T> = std::result::Result<T, KinematicsError>;

/// Orthonormal frame attached to the propagation direction (Theta, Phi):
/// rows are e_P, e_Theta, e_Phi of the rotation matrix taking lab vectors
/// to frame components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub theta: f64,
    pub phi: f64,
    basis: [[f64; 3]; 3],
}

/// Build the frame for propagation direction (Theta, Phi).
pub fn frame_basis(theta: f64, phi: f64) -> Frame {
    let (st, ct) = (theta.sin(), theta.cos());
    let (sp, cp) = (phi.sin(), phi.cos());
    Frame {
        theta,
        phi,
        basis: [
            [st * cp, st * sp, ct],
            [ct * cp, ct * sp, -st],
            [-sp, cp, 0.0],
        ],
    }
}

impl Frame {
    pub fn basis(&self) -> &[[f64; 3]; 3] {
        &self.basis
    }
    pub fn e_p(&self) -> [f64; 3] {
        self.basis[0]
    }
    pub fn e_theta(&self) -> [f64; 3] {
        self.basis[1]
    }
    pub fn e_phi(&self) -> [f64; 3] {
        self.basis[2]
    }

    /// Lab vector -> (r_P, r_Theta, r_Phi).
    pub fn to_frame(&self, v: [f64; 3]) -> [f64; 3] {
        let b = &self.basis;
        [dot(b[0], v), dot(b[1], v), dot(b[2], v)]
    }

    /// Frame components -> lab vector.
    pub fn to_lab(&self, v: [f64; 3]) -> [f64; 3] {
        let b = &self.basis;
        [
            b[0][0] * v[0] + b[1][0] * v[1] + b[2][0] * v[2],
            b[0][1] * v[0] + b[1][1] * v[1] + b[2][1] * v[2],
            b[0][2] * v[0] + b[1][2] * v[1] + b[2][2] * v[2],
        ]
    }
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(v: [f64; 3]) -> f64 {
    dot(v, v).sqrt()
}

/// Collective coordinates of an electron pair: relative position r,
/// center-of-mass wave-vector P, relative wave-vector k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairConfig {
    pub r: [f64; 3],
    pub p_total: [f64; 3],
    pub k_rel: [f64; 3],
}

impl PairConfig {
    /// Cylindrical coordinates (rho, phi, z) of r in the given frame,
    /// phi measured from e_Theta toward e_Phi in [0, 2 pi).
    pub fn cylindrical(&self, frame: &Frame) -> (f64, f64, f64) {
        let rf = frame.to_frame(self.r);
        let rho = (rf[1] * rf[1] + rf[2] * rf[2]).sqrt();
        let mut phi = rf[2].atan2(rf[1]);
        if phi < 0.0 {
            phi += 2.0 * std::f64::consts::PI;
        }
        (rho, phi, rf[0])
    }
}

/// Constrained free-pair wave exp(i [k.r - (k.P_hat)(r.P_hat)]).
///
/// Unit modulus everywhere and independent of the longitudinal component
/// of r along the propagation direction.
pub fn pair_wave(config: &PairConfig) -> Result<Complex64> {
    let p_norm = norm(config.p_total);
    if p_norm == 0.0 {
        return Err(KinematicsError::ZeroPropagation);
    }
    let p_hat = [
        config.p_total[0] / p_norm,
        config.p_total[1] / p_norm,
        config.p_total[2] / p_norm,
    ];
    let phase = dot(config.k_rel, config.r) - dot(config.k_rel, p_hat) * dot(config.r, p_hat);
    Ok(Complex64::from_polar(1.0, phase))
}

/// Exchange phases for total spin S built from two particles of spin s
/// (s passed doubled, so electrons are two_s = 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangePhases {
    /// Phase under spatial interchange: (-1)^S.
    pub spatial: i32,
    /// Phase under full (space + spin) interchange: (-1)^(2s).
    pub full: i32,
}

pub fn exchange_phase(total_spin: u32, two_s: u32) -> Result<ExchangePhases> {
    if total_spin > two_s {
        return Err(KinematicsError::Domain(format!(
            "total spin {total_spin} exceeds 2s = {two_s}"
        )));
    }
    let sign = |n: u32| if n.is_multiple_of(2) { 1 } else { -1 };
    Ok(ExchangePhases {
        spatial: sign(total_spin),
        full: sign(two_s),
    })
}

/// Spin channel of the pair: total spin S with projection M; the particle
/// spin is fixed at 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinChannel {
    pub total_spin: u32,
    pub projection: i32,
}

impl SpinChannel {
    pub fn new(total_spin: u32, projection: i32) -> Result<Self> {
        if total_spin > 1 || projection.unsigned_abs() > total_spin {
            return Err(KinematicsError::Domain(format!(
                "invalid spin channel S = {total_spin}, M = {projection}"
            )));
        }
        Ok(SpinChannel {
            total_spin,
            projection,
        })
    }
}

/// Free planar mode J_Lambda(k rho) e^{i Lambda phi}. The helicity must
/// share the parity of the total spin (Bloch exchange condition).
pub fn free_planar_mode(
    lambda: u32,
    k: f64,
    rho: f64,
    phi: f64,
    spin: &SpinChannel,
) -> Result<Complex64> {
    if lambda % 2 != spin.total_spin % 2 {
        return Err(KinematicsError::Parity {
            lambda,
            spin: spin.total_spin,
        });
    }
    let radial = bessel_j(lambda, k * rho)?;
    Ok(radial * Complex64::from_polar(1.0, lambda as f64 * phi))
}

/// Complex field sampled on a rectangular grid in frame coordinates
/// (axis 0 along e_P, axis 1 along e_Theta, axis 2 along e_Phi).
#[derive(Debug, Clone)]
pub struct GridField {
    pub frame: Frame,
    pub origin: [f64; 3],
    pub spacing: [f64; 3],
    pub shape: [usize; 3],
    values: Vec<Complex64>,
}

impl GridField {
    /// Sample `f` (a function of the lab-frame relative position) on the grid.
    pub fn sample(
        frame: Frame,
        origin: [f64; 3],
        spacing: [f64; 3],
        shape: [usize; 3],
        f: impl Fn([f64; 3]) -> Complex64,
    ) -> GridField {
        let mut values = Vec::with_capacity(shape[0] * shape[1] * shape[2]);
        for i in 0..shape[0] {
            for j in 0..shape[1] {
                for k in 0..shape[2] {
                    let fp = [
                        origin[0] + i as f64 * spacing[0],
                        origin[1] + j as f64 * spacing[1],
                        origin[2] + k as f64 * spacing[2],
                    ];
                    values.push(f(frame.to_lab(fp)));
                }
            }
        }
        GridField {
            frame,
            origin,
            spacing,
            shape,
            values,
        }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.shape[1] + j) * self.shape[2] + k
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> Complex64 {
        self.values[self.idx(i, j, k)]
    }

    /// Frame coordinates of a grid node.
    pub fn frame_point(&self, i: usize, j: usize, k: usize) -> [f64; 3] {
        [
            self.origin[0] + i as f64 * self.spacing[0],
            self.origin[1] + j as f64 * self.spacing[1],
            self.origin[2] + k as f64 * self.spacing[2],
        ]
    }

    /// Max-norm of the sampled field.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// Residuals of the pair of second-class constraints on a sampled field:
/// max |r_P psi| (screening) and the max-norm central-difference
/// directional derivative of psi along e_P (longitudinal redundancy).
pub fn constraint_residuals(field: &GridField) -> Result<(f64, f64)> {
    if field.shape[0] < 3 {
        return Err(KinematicsError::GridTooSmall {
            axis: 0,
            needed: 3,
            got: field.shape[0],
        });
    }
    let mut screening = 0.0_f64;
    let mut longitudinal = 0.0_f64;
    let h = field.spacing[0];
    for i in 0..field.shape[0] {
        for j in 0..field.shape[1] {
            for k in 0..field.shape[2] {
                let r_p = field.frame_point(i, j, k)[0];
                screening = screening.max((r_p * field.value(i, j, k)).norm());
                if i >= 1 && i + 1 < field.shape[0] {
                    let d = (field.value(i + 1, j, k) - field.value(i - 1, j, k)) / (2.0 * h);
                    longitudinal = longitudinal.max(d.norm());
                }
            }
        }
    }
    Ok((screening, longitudinal))
}

/// Finite-difference Laplacian of the field divided by the field, at the
/// grid center. For the constrained pair wave this reproduces
/// -(k^2 - (k.P_hat)^2).
pub fn laplacian_ratio(field: &GridField) -> Result<Complex64> {
    for (axis, &n) in field.shape.iter().enumerate() {
        if n < 3 {
            return Err(KinematicsError::GridTooSmall {
                axis,
                needed: 3,
                got: n,
            });
        }
    }
    let c = [field.shape[0] / 2, field.shape[1] / 2, field.shape[2] / 2];
    let center = field.value(c[0], c[1], c[2]);
    if center.norm() < 1e-300 {
        return Err(KinematicsError::Domain(
            "field vanishes at grid center".into(),
        ));
    }
    let mut lap = Complex64::new(0.0, 0.0);
    for axis in 0..3 {
        let h = field.spacing[axis];
        let mut lo = c;
        let mut hi = c;
        lo[axis] -= 1;
        hi[axis] += 1;
        lap += (field.value(hi[0], hi[1], hi[2]) - 2.0 * center + field.value(lo[0], lo[1], lo[2]))
            / (h * h);
    }
    Ok(lap / center)
}
