//! Constrained two-electron dynamics on a plane.
//!
//! The crate implements, end to end, the reduction of two identical
//! electrons to an effective planar problem and everything that falls out
//! of it:
//!
//! * [`specfun`] — complex log-gamma, integer-order Bessel functions and
//!   Jacobi polynomials used by every other module.
//! * [`monopole`] — sectional monopole harmonics on the momentum sphere,
//!   the two-patch U(1) gauge potentials, field strength, Berry phases and
//!   the helicity quantization condition.
//! * [`kinematics`] — the propagation-frame rotation, the constrained
//!   pair wave-function, constraint residuals and exchange-phase rules.
//! * [`scatter`] — exact planar Coulomb scattering: phase shifts, Jost
//!   functions, S-matrix, Bloch amplitude series, cross sections, and an
//!   independent radial-ODE oracle for all of the closed forms.
//! * [`classical`] — the quasi-classical counterpart: Kepler orbits,
//!   Laplace-Runge-Lenz machinery, deflection law, Rutherford formula and
//!   a Monte-Carlo cross-section estimator.
//! * [`cli`] — a reproducible sweep runner emitting CSV/JSON tables.
//!
//! Atomic units (`e = m_e = hbar = 1`) throughout; lengths in bohr,
//! wavenumbers in 1/bohr.
//!
//! Each runnable capability has a matching program under `examples/`;
//! start with `cargo run --example phase_shifts`.

pub mod classical;
pub mod cli;
pub mod kinematics;
pub mod monopole;
mod ode;
pub mod scatter;
pub mod specfun;

pub use num_complex::Complex64;
