//! Thermal baths, the covariance generator and its dynamics.

mod asymptotic;
pub mod equilibrium;
mod evolve;
mod lyapunov;

use nalgebra::{Complex, Matrix2, Matrix4, Vector2, Vector4};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::{
    mode_rotation, normal_mode_basis, symplectic_form, NormalMode, NormalModeBasis, OscillatorPair,
};

pub use asymptotic::{asymptotic_state, AsymptoticOrbit};
pub use evolve::{evolve, Trajectory};
pub use lyapunov::steady_state;

const ZERO_TEMPERATURE: f64 = 1e-8;
const DFS_THRESHOLD: f64 = 1e-12;
const WEAK_COUPLING_RATIO: f64 = 0.1;
const CUTOFF_RATIO: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BathTopology {
    /// One environment coupled to `x1 + x2`.
    Common,
    /// One independent environment per oscillator.
    Separate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BathConfig {
    pub topology: BathTopology,
    pub gamma0: f64,
    pub temperature: f64,
    pub cutoff: f64,
}

impl BathConfig {
    /// Checks weak coupling (`γ0 < 0.1·min ω`), `T ≥ 0` and `Λ ≥ 5·Ω+`.
    pub fn validate(&self, pair: &OscillatorPair) -> Result<()> {
        let basis = normal_mode_basis(pair)?;
        self.validate_with(pair, &basis)
    }

    fn validate_with(&self, pair: &OscillatorPair, basis: &NormalModeBasis) -> Result<()> {
        let min_omega = pair.omega1.min(pair.omega2);
        if !(self.gamma0.is_finite() && self.gamma0 > 0.0) {
            return Err(Error::InvalidBath(format!(
                "gamma0 must be finite and > 0, got {}",
                self.gamma0
            )));
        }
        if self.gamma0 >= WEAK_COUPLING_RATIO * min_omega {
            return Err(Error::InvalidBath(format!(
                "weak coupling requires gamma0 < 0.1·min(ω1, ω2) = {}, got {}",
                WEAK_COUPLING_RATIO * min_omega,
                self.gamma0
            )));
        }
        if !(self.temperature.is_finite() && self.temperature >= 0.0) {
            return Err(Error::InvalidBath(format!(
                "temperature must be finite and ≥ 0, got {}",
                self.temperature
            )));
        }
        if !self.cutoff.is_finite() || self.cutoff < CUTOFF_RATIO * basis.omega_plus {
            return Err(Error::InvalidBath(format!(
                "cutoff must satisfy Λ ≥ 5·ω+ = {}, got {}",
                CUTOFF_RATIO * basis.omega_plus,
                self.cutoff
            )));
        }
        Ok(())
    }

    /// Mean thermal occupation at frequency `omega`, exactly zero at `T = 0`.
    pub fn occupation(&self, omega: f64) -> f64 {
        if self.temperature < ZERO_TEMPERATURE {
            0.0
        } else {
            1.0 / (omega / self.temperature).exp_m1()
        }
    }
}

/// Linear generator `dσ/dt = Aσ + σAᵀ + D` in the `(x1, p1, x2, p2)` frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub drift: Matrix4<f64>,
    pub diffusion: Matrix4<f64>,
    /// `Γ_nm = γ0 Σ_k c_n^k c_m^k` over the normal-mode slots.
    pub damping: Matrix2<f64>,
    /// Normal mode decoupled from every bath, if any.
    pub dfs_mode: Option<NormalMode>,
    pub basis: NormalModeBasis,
    mode_drift: Matrix4<f64>,
    mode_diffusion: Matrix4<f64>,
    mode_transform: Matrix4<f64>,
}

impl Generator {
    /// Closed dynamics (no bath).
    pub fn hamiltonian(pair: &OscillatorPair) -> Result<Self> {
        let basis = normal_mode_basis(pair)?;
        Ok(Self::from_mode_frame(
            basis,
            mode_transform(pair, &basis),
            free_drift(&basis),
            Matrix4::zeros(),
            Matrix2::zeros(),
            None,
        ))
    }

    fn from_mode_frame(
        basis: NormalModeBasis,
        transform: Matrix4<f64>,
        mode_drift: Matrix4<f64>,
        mode_diffusion: Matrix4<f64>,
        damping: Matrix2<f64>,
        dfs_mode: Option<NormalMode>,
    ) -> Self {
        let inverse = transform
            .try_inverse()
            .expect("mode transform is symplectic");
        let diffusion = inverse * mode_diffusion * inverse.transpose();
        Generator {
            drift: inverse * mode_drift * transform,
            diffusion: (diffusion + diffusion.transpose()) * 0.5,
            damping,
            dfs_mode,
            basis,
            mode_drift,
            mode_diffusion,
            mode_transform: transform,
        }
    }

    /// Drift in the normal-mode quadratures `(X+, P+, X−, P−)`, each scaled
    /// at its own mode frequency.
    pub fn mode_drift(&self) -> &Matrix4<f64> {
        &self.mode_drift
    }

    pub fn mode_diffusion(&self) -> &Matrix4<f64> {
        &self.mode_diffusion
    }

    /// Symplectic map from oscillator quadratures to normal-mode quadratures.
    pub fn mode_transform(&self) -> &Matrix4<f64> {
        &self.mode_transform
    }

    /// Dissipative part of the mode-frame drift.
    pub fn mode_dissipation(&self) -> Matrix4<f64> {
        self.mode_drift - free_drift(&self.basis)
    }

    /// Largest normal-mode frequency, the stiffness scale for step sizes.
    pub fn omega_plus(&self) -> f64 {
        self.basis.omega_plus
    }
}

fn free_drift(basis: &NormalModeBasis) -> Matrix4<f64> {
    let mut h = Matrix4::zeros();
    for (k, omega) in basis.mode_frequencies.iter().enumerate() {
        h[(2 * k, 2 * k + 1)] = *omega;
        h[(2 * k + 1, 2 * k)] = -omega;
    }
    h
}

/// `diag(√Ω) · R(θ) · diag(1/√ω)`: oscillator quadratures scaled at the bare
/// frequencies to mode quadratures scaled at the mode frequencies.
pub(crate) fn mode_transform(pair: &OscillatorPair, basis: &NormalModeBasis) -> Matrix4<f64> {
    let scaling = |a: f64, b: f64| {
        Matrix4::from_diagonal(&Vector4::new(
            a.sqrt(),
            1.0 / a.sqrt(),
            b.sqrt(),
            1.0 / b.sqrt(),
        ))
    };
    let [wa, wb] = basis.mode_frequencies;
    let to_physical = scaling(1.0 / pair.omega1, 1.0 / pair.omega2);
    scaling(wa, wb) * mode_rotation(basis.theta) * to_physical
}

/// Coupling vectors of each bath over the `[Plus, Minus]` mode slots.
fn coupling_vectors(topology: BathTopology, theta: f64) -> Vec<Vector2<f64>> {
    let (s, c) = theta.sin_cos();
    let snap = |v: Vector2<f64>| v.map(|x| if x.abs() < DFS_THRESHOLD { 0.0 } else { x });
    match topology {
        BathTopology::Common => vec![snap(Vector2::new(c + s, c - s))],
        BathTopology::Separate => vec![snap(Vector2::new(c, -s)), snap(Vector2::new(s, c))],
    }
}

/// Weak-coupling Markovian generator for `pair` in `bath`.
///
/// Each bath contributes a pair of jump operators, emission and absorption,
/// on the normal modes it couples to with weights `c_n` and thermal rates
/// `γ0(n̄_n + 1)`, `γ0 n̄_n` at the mode frequencies. The resulting semigroup
/// is completely positive, relaxes to the Gibbs state of the mode
/// Hamiltonian whenever every mode is damped, and leaves a mode with `c_n = 0`
/// in every bath strictly unitary.
pub fn build_generator(pair: &OscillatorPair, bath: &BathConfig) -> Result<Generator> {
    let basis = normal_mode_basis(pair)?;
    bath.validate_with(pair, &basis)?;

    let vectors = coupling_vectors(bath.topology, basis.theta);
    let damping = vectors.iter().fold(Matrix2::zeros(), |acc, c| {
        acc + c * c.transpose() * bath.gamma0
    });
    let dfs_mode = match bath.topology {
        BathTopology::Common => [NormalMode::Plus, NormalMode::Minus]
            .into_iter()
            .find(|m| vectors[0][m.index()] == 0.0),
        BathTopology::Separate => None,
    };

    let occupations = basis.mode_frequencies.map(|w| bath.occupation(w));
    let i = Complex::i();
    let mut correlations: Matrix4<Complex<f64>> = Matrix4::zeros();
    for c in &vectors {
        let mut emission: Vector4<Complex<f64>> = Vector4::zeros();
        let mut absorption: Vector4<Complex<f64>> = Vector4::zeros();
        for n in 0..2 {
            let down = c[n] * (bath.gamma0 * (occupations[n] + 1.0) / 2.0).sqrt();
            let up = c[n] * (bath.gamma0 * occupations[n] / 2.0).sqrt();
            emission[2 * n] += Complex::from(down);
            emission[2 * n + 1] += i * down;
            absorption[2 * n] += Complex::from(up);
            absorption[2 * n + 1] -= i * up;
        }
        for jump in [emission, absorption] {
            correlations += jump.conjugate() * jump.transpose();
        }
    }
    let j = symplectic_form();
    let (re, im) = (correlations.map(|z| z.re), correlations.map(|z| z.im));
    let mode_drift = free_drift(&basis) + j * im;
    let mode_diffusion = j * re * j.transpose();

    Ok(Generator::from_mode_frame(
        basis,
        mode_transform(pair, &basis),
        mode_drift,
        (mode_diffusion + mode_diffusion.transpose()) * 0.5,
        damping,
        dfs_mode,
    ))
}
