//! Adaptive embedded Runge-Kutta integrator (Dormand-Prince 5(4)).
//!
//! Shared by the radial scattering oracle and the classical trajectory
//! integrator. Fixed-size state vectors keep everything on the stack.

#[derive(Debug, Clone)]
pub(crate) struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub h_init: f64,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            rtol: 1e-10,
            atol: 0.0,
            h_init: 1e-6,
            max_steps: 50_000_000,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub(crate) enum OdeError {
    #[error("step size underflow at t = {0}")]
    StepUnderflow(f64),
    #[error("step budget exhausted at t = {0}")]
    MaxSteps(f64),
}

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 35.0 / 384.0 - 5179.0 / 57600.0;
const E3: f64 = 500.0 / 1113.0 - 7571.0 / 16695.0;
const E4: f64 = 125.0 / 192.0 - 393.0 / 640.0;
const E5: f64 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
const E6: f64 = 11.0 / 84.0 - 187.0 / 2100.0;
const E7: f64 = -1.0 / 40.0;

pub(crate) struct Stepper<'a, const N: usize, F: Fn(f64, &[f64; N]) -> [f64; N]> {
    f: &'a F,
    pub t: f64,
    pub y: [f64; N],
    h: f64,
    opts: OdeOptions,
    steps: usize,
}

impl<'a, const N: usize, F: Fn(f64, &[f64; N]) -> [f64; N]> Stepper<'a, N, F> {
    pub fn new(f: &'a F, t0: f64, y0: [f64; N], opts: OdeOptions) -> Self {
        let h = opts.h_init;
        Stepper {
            f,
            t: t0,
            y: y0,
            h,
            opts,
            steps: 0,
        }
    }

    /// One accepted adaptive step, not passing beyond `t_limit`.
    pub fn step(&mut self, t_limit: f64) -> Result<(), OdeError> {
        let dir = (t_limit - self.t).signum();
        loop {
            self.steps += 1;
            if self.steps > self.opts.max_steps {
                return Err(OdeError::MaxSteps(self.t));
            }
            let mut h = self.h.abs().copysign(dir);
            if (self.t + h - t_limit) * dir > 0.0 {
                h = t_limit - self.t;
            }
            if h.abs() < 1e-14 * self.t.abs().max(1.0) {
                return Err(OdeError::StepUnderflow(self.t));
            }
            let (y_new, err) = self.try_step(h);
            if err <= 1.0 {
                self.t += h;
                self.y = y_new;
                let grow = (0.9 * err.powf(-0.2)).clamp(0.2, 5.0);
                self.h = (h * grow).abs();
                return Ok(());
            }
            let shrink = (0.9 * err.powf(-0.2)).clamp(0.1, 1.0);
            self.h = (h * shrink).abs();
        }
    }

    fn try_step(&self, h: f64) -> ([f64; N], f64) {
        let f = self.f;
        let t = self.t;
        let y = &self.y;
        let k1 = f(t, y);
        let k2 = f(t + A21 * h, &lc(y, &[(A21, &k1)], h));
        let k3 = f(t + 0.3 * h, &lc(y, &[(A31, &k1), (A32, &k2)], h));
        let k4 = f(
            t + 0.8 * h,
            &lc(y, &[(A41, &k1), (A42, &k2), (A43, &k3)], h),
        );
        let k5 = f(
            t + 8.0 / 9.0 * h,
            &lc(y, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)], h),
        );
        let k6 = f(
            t + h,
            &lc(
                y,
                &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
                h,
            ),
        );
        let y5 = lc(
            y,
            &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)],
            h,
        );
        let k7 = f(t + h, &y5);

        let mut y_norm = 0.0_f64;
        for i in 0..N {
            y_norm = y_norm.max(y[i].abs().max(y5[i].abs()));
        }
        let mut err = 0.0_f64;
        for i in 0..N {
            let e =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            // mixed scale: componentwise with a small coupling floor so
            // zero crossings of one component do not stall the step
            let sc = self.opts.atol
                + self.opts.rtol * (y[i].abs().max(y5[i].abs()) + 0.01 * y_norm)
                + 1e-300;
            err += (e / sc) * (e / sc);
        }
        (y5, (err / N as f64).sqrt())
    }
}

#[inline]
fn lc<const N: usize>(y: &[f64; N], terms: &[(f64, &[f64; N])], h: f64) -> [f64; N] {
    let mut out = *y;
    for i in 0..N {
        let mut acc = 0.0;
        for (c, k) in terms {
            acc += c * k[i];
        }
        out[i] += h * acc;
    }
    out
}

/// Integrate to `t_end`, landing on it exactly.
pub(crate) fn integrate_to<const N: usize>(
    f: &impl Fn(f64, &[f64; N]) -> [f64; N],
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    opts: &OdeOptions,
) -> Result<[f64; N], OdeError> {
    let mut st = Stepper::new(f, t0, y0, opts.clone());
    while (t_end - st.t).abs() > 1e-14 * t_end.abs().max(1.0) {
        st.step(t_end)?;
    }
    Ok(st.y)
}
