use nalgebra::Matrix4;

use super::Generator;
use crate::error::{Error, Result};
use crate::gaussian::{symmetrize, symplectic_spectrum, CovarianceState, VACUUM_VARIANCE};

const PHYSICALITY_TOL: f64 = 1e-6;
const MAX_STEP_RATIO: f64 = 0.01;

/// Sampled solution of the covariance equation.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<CovarianceState>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &CovarianceState)> {
        self.times.iter().copied().zip(self.states.iter())
    }

    pub fn last(&self) -> Option<(f64, &CovarianceState)> {
        Some((*self.times.last()?, self.states.last()?))
    }
}

/// Integrates `dσ/dt = Aσ + σAᵀ + D` from `t = 0` to `t_end` with classical
/// RK4.
///
/// The step is shortened to `t_end / ⌈t_end/dt⌉` so the run ends exactly at
/// `t_end`. States are emitted every `sample_stride` steps and at `t_end`;
/// each emitted state must keep `ν− ≥ 1/2 − 1e-6`, otherwise the run aborts.
pub fn evolve(
    initial: &CovarianceState,
    gen: &Generator,
    t_end: f64,
    dt: f64,
    sample_stride: usize,
) -> Result<Trajectory> {
    if !(t_end.is_finite() && t_end > 0.0) {
        return Err(Error::param(
            "t_end",
            format!("must be finite and > 0, got {t_end}"),
        ));
    }
    let max_dt = MAX_STEP_RATIO / gen.omega_plus();
    if !(dt.is_finite() && dt > 0.0 && dt <= max_dt) {
        return Err(Error::param(
            "dt",
            format!("must satisfy 0 < dt ≤ 0.01/ω+ = {max_dt}, got {dt}"),
        ));
    }
    if sample_stride == 0 {
        return Err(Error::param("sample_stride", "must be ≥ 1"));
    }

    let steps = (t_end / dt - 1e-9).ceil().max(1.0) as usize;
    let h = t_end / steps as f64;
    let rhs = |s: &Matrix4<f64>| {
        let a = gen.drift * s;
        a + a.transpose() + gen.diffusion
    };

    let capacity = steps / sample_stride + 2;
    let mut trajectory = Trajectory {
        times: Vec::with_capacity(capacity),
        states: Vec::with_capacity(capacity),
    };
    let mut sigma = *initial.matrix();
    trajectory.push(0.0, sigma)?;
    for step in 1..=steps {
        let k1 = rhs(&sigma);
        let k2 = rhs(&(sigma + k1 * (h / 2.0)));
        let k3 = rhs(&(sigma + k2 * (h / 2.0)));
        let k4 = rhs(&(sigma + k3 * h));
        sigma = symmetrize(&(sigma + (k1 + (k2 + k3) * 2.0 + k4) * (h / 6.0)));
        if step % sample_stride == 0 || step == steps {
            trajectory.push(step as f64 * h, sigma)?;
        }
    }
    Ok(trajectory)
}

impl Trajectory {
    fn push(&mut self, time: f64, sigma: Matrix4<f64>) -> Result<()> {
        let (nu_minus, _) = symplectic_spectrum(&sigma);
        if nu_minus.is_nan() || nu_minus < VACUUM_VARIANCE - PHYSICALITY_TOL {
            return Err(Error::PhysicalityAbort { time, nu_minus });
        }
        self.times.push(time);
        self.states.push(CovarianceState::trusted(sigma));
        Ok(())
    }
}
