//! Two-mode Gaussian states in covariance-matrix form.
//!
//! Quadratures are ordered `(x1, p1, x2, p2)` and made dimensionless per
//! oscillator (`x·√ω`, `p/√ω` at the bare frequency), with ħ = 1 and unit
//! masses. The vacuum has variance 1/2 in every quadrature, so thermal states
//! are isotropic with `⟨x²⟩ = ⟨p²⟩ = n̄ + 1/2`.

use std::f64::consts::FRAC_PI_4;

use nalgebra::{Matrix2, Matrix4};

use crate::error::{Error, Result};

/// Variance of either quadrature in the vacuum.
pub const VACUUM_VARIANCE: f64 = 0.5;

const SYMMETRY_TOL: f64 = 1e-12;
const BONA_FIDE_TOL: f64 = 1e-9;
const MAX_SQUEEZING: f64 = 10.0;

/// Covariance matrix of a zero-mean two-mode Gaussian state.
///
/// Always symmetric, positive definite and bona fide (both symplectic
/// eigenvalues ≥ 1/2 up to `1e-9`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceState {
    sigma: Matrix4<f64>,
}

/// Local invariants `det α`, `det β`, `det γ` and `det σ` of
/// `σ = [[α, γ], [γᵀ, β]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Invariants {
    pub det_a: f64,
    pub det_b: f64,
    pub det_c: f64,
    pub det_sigma: f64,
}

impl CovarianceState {
    /// Validates `sigma` and stores its symmetrized copy.
    pub fn new(sigma: Matrix4<f64>) -> Result<Self> {
        if sigma.iter().any(|v| !v.is_finite()) {
            return Err(Error::param("sigma", "non-finite entry"));
        }
        let scale = sigma.amax().max(f64::MIN_POSITIVE);
        let asymmetry = (sigma - sigma.transpose()).amax();
        if asymmetry > SYMMETRY_TOL * scale {
            return Err(Error::NotSymmetric { asymmetry });
        }
        let sigma = symmetrize(&sigma);
        if sigma.cholesky().is_none() {
            return Err(Error::NotPositiveDefinite);
        }
        let (nu_minus, _) = symplectic_spectrum(&sigma);
        if nu_minus < VACUUM_VARIANCE - BONA_FIDE_TOL {
            return Err(Error::Unphysical { nu_minus });
        }
        Ok(CovarianceState { sigma })
    }

    /// Wraps a matrix the caller has already checked.
    pub(crate) fn trusted(sigma: Matrix4<f64>) -> Self {
        CovarianceState { sigma }
    }

    pub fn vacuum() -> Self {
        CovarianceState {
            sigma: Matrix4::identity() * VACUUM_VARIANCE,
        }
    }

    /// Product of thermal states with mean occupations `n1`, `n2`.
    pub fn thermal(n1: f64, n2: f64) -> Result<Self> {
        for (name, n) in [("n1", n1), ("n2", n2)] {
            if !(n.is_finite() && n >= 0.0) {
                return Err(Error::param(
                    name,
                    format!("occupation must be finite and ≥ 0, got {n}"),
                ));
            }
        }
        let v1 = n1 + VACUUM_VARIANCE;
        let v2 = n2 + VACUUM_VARIANCE;
        Ok(CovarianceState {
            sigma: Matrix4::from_diagonal(&nalgebra::Vector4::new(v1, v1, v2, v2)),
        })
    }

    /// Product of two single-mode squeezed vacua, each squeezed in position
    /// (`⟨x_i²⟩ = e^{−2 r_i}/2`, `⟨p_i²⟩ = e^{2 r_i}/2`).
    pub fn squeezed_product(r1: f64, r2: f64) -> Result<Self> {
        check_squeezing("r1", r1)?;
        check_squeezing("r2", r2)?;
        let d = nalgebra::Vector4::new(
            (-2.0 * r1).exp() / 2.0,
            (2.0 * r1).exp() / 2.0,
            (-2.0 * r2).exp() / 2.0,
            (2.0 * r2).exp() / 2.0,
        );
        Ok(CovarianceState {
            sigma: Matrix4::from_diagonal(&d),
        })
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.sigma
    }

    /// 2×2 block `(i, j)` with `i, j ∈ {0, 1}` the oscillator indices.
    pub fn block(&self, i: usize, j: usize) -> Matrix2<f64> {
        self.sigma.fixed_view::<2, 2>(2 * i, 2 * j).into_owned()
    }

    pub fn invariants(&self) -> Invariants {
        let (nu_minus, nu_plus) = symplectic_spectrum(&self.sigma);
        Invariants {
            det_a: self.block(0, 0).determinant(),
            det_b: self.block(1, 1).determinant(),
            det_c: self.block(0, 1).determinant(),
            // Product of symplectic eigenvalues: accurate even when the
            // entries are large and det σ is small (strong squeezing).
            det_sigma: (nu_minus * nu_plus).powi(2),
        }
    }

    pub fn symplectic_eigenvalues(&self) -> (f64, f64) {
        symplectic_spectrum(&self.sigma)
    }

    /// Applies independent phase-space rotations `e^{-i φ_k n_k}` to each
    /// oscillator.
    pub fn local_rotation(&self, phi1: f64, phi2: f64) -> Self {
        let mut r = Matrix4::zeros();
        r.fixed_view_mut::<2, 2>(0, 0).copy_from(&rotation2(phi1));
        r.fixed_view_mut::<2, 2>(2, 2).copy_from(&rotation2(phi2));
        self.congruence(&r)
    }

    /// Applies the Gaussian unitary with symplectic matrix `s` (`σ → SσSᵀ`).
    pub fn transformed(&self, s: &Matrix4<f64>) -> Result<Self> {
        let omega = symplectic_form();
        let defect = (s * omega * s.transpose() - omega).amax();
        if defect.is_nan() || defect > 1e-10 * s.amax().powi(2).max(1.0) {
            return Err(Error::param(
                "s",
                format!("matrix is not symplectic (defect {defect:.3e})"),
            ));
        }
        Ok(self.congruence(s))
    }

    /// `S σ Sᵀ` for a symplectic `S`; the result is bona fide by
    /// construction so only symmetrization is applied.
    pub(crate) fn congruence(&self, s: &Matrix4<f64>) -> Self {
        CovarianceState {
            sigma: symmetrize(&(s * self.sigma * s.transpose())),
        }
    }

    /// Covariance matrix of the partial transpose (`p2 → −p2`). Not a state
    /// in general, hence returned as a raw matrix.
    pub fn partial_transpose(&self) -> Matrix4<f64> {
        let mut m = self.sigma;
        for k in 0..4 {
            if k != 3 {
                m[(k, 3)] = -m[(k, 3)];
                m[(3, k)] = -m[(3, k)];
            }
        }
        m
    }
}

fn check_squeezing(name: &'static str, r: f64) -> Result<()> {
    if !r.is_finite() || !(0.0..=MAX_SQUEEZING).contains(&r) {
        return Err(Error::param(
            name,
            format!("squeezing must be finite and in [0, {MAX_SQUEEZING}], got {r}"),
        ));
    }
    Ok(())
}

pub(crate) fn symmetrize(m: &Matrix4<f64>) -> Matrix4<f64> {
    (m + m.transpose()) * 0.5
}

pub(crate) fn rotation2(phi: f64) -> Matrix2<f64> {
    let (s, c) = phi.sin_cos();
    Matrix2::new(c, s, -s, c)
}

/// The symplectic form `⊕ [[0, 1], [−1, 0]]`.
pub fn symplectic_form() -> Matrix4<f64> {
    let mut j = Matrix4::zeros();
    j[(0, 1)] = 1.0;
    j[(1, 0)] = -1.0;
    j[(2, 3)] = 1.0;
    j[(3, 2)] = -1.0;
    j
}

/// Symplectic eigenvalues `(ν−, ν+)` of a symmetric positive-definite
/// matrix.
///
/// The moduli of the eigenvalues of `iΩσ` coincide with the singular values
/// of the antisymmetric matrix `σ^{1/2} Ω σ^{1/2}`; the latter is a
/// well-conditioned problem even for strongly squeezed states, where the
/// characteristic-polynomial route loses most of its digits.
pub(crate) fn symplectic_spectrum(sigma: &Matrix4<f64>) -> (f64, f64) {
    let eig = symmetrize(sigma).symmetric_eigen();
    let sqrt_eigs = eig.eigenvalues.map(|v| v.max(0.0).sqrt());
    let root = eig.eigenvectors * Matrix4::from_diagonal(&sqrt_eigs) * eig.eigenvectors.transpose();
    let k = root * symplectic_form() * root;
    let mut s: Vec<f64> = k.singular_values().iter().copied().collect();
    s.sort_by(f64::total_cmp);
    ((s[0] + s[1]) / 2.0, (s[2] + s[3]) / 2.0)
}

/// Symplectic eigenvalues `(ν−, ν+)` with `ν− ≤ ν+`.
pub fn symplectic_eigenvalues(state: &CovarianceState) -> (f64, f64) {
    state.symplectic_eigenvalues()
}

/// Two-mode squeezed vacuum `√(1−μ) Σ μ^{n/2} |n⟩|n⟩` with `μ = tanh² r`.
pub fn tms_state(r: f64) -> Result<CovarianceState> {
    check_squeezing("r", r)?;
    let c = (2.0 * r).cosh() / 2.0;
    let s = (2.0 * r).sinh() / 2.0;
    #[rustfmt::skip]
    let sigma = Matrix4::new(
        c, 0.0, s, 0.0,
        0.0, c, 0.0, -s,
        s, 0.0, c, 0.0,
        0.0, -s, 0.0, c,
    );
    Ok(CovarianceState { sigma })
}

/// Two position-coupled oscillators,
/// `H = p1²/2 + ω1² x1²/2 + p2²/2 + ω2² x2²/2 + λ x1 x2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorPair {
    pub omega1: f64,
    pub omega2: f64,
    pub lambda: f64,
}

impl OscillatorPair {
    pub fn new(omega1: f64, omega2: f64, lambda: f64) -> Result<Self> {
        let pair = OscillatorPair {
            omega1,
            omega2,
            lambda,
        };
        pair.validate()?;
        Ok(pair)
    }

    pub fn identical(omega: f64) -> Result<Self> {
        Self::new(omega, omega, 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, w) in [("omega1", self.omega1), ("omega2", self.omega2)] {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::param(
                    name,
                    format!("frequency must be finite and > 0, got {w}"),
                ));
            }
        }
        if !self.lambda.is_finite() {
            return Err(Error::param("lambda", "non-finite coupling"));
        }
        let lambda_sq = self.lambda * self.lambda;
        let bound = (self.omega1 * self.omega2).powi(2);
        if lambda_sq >= bound {
            return Err(Error::UnstablePair { lambda_sq, bound });
        }
        Ok(())
    }

    pub fn is_identical(&self) -> bool {
        self.omega1 == self.omega2
    }

    /// Stiffness matrix `[[ω1², λ], [λ, ω2²]]`.
    pub fn stiffness(&self) -> Matrix2<f64> {
        Matrix2::new(
            self.omega1.powi(2),
            self.lambda,
            self.lambda,
            self.omega2.powi(2),
        )
    }
}

/// Slot of a normal mode in the rotated frame. `Plus` carries the
/// coefficients `(cos θ, sin θ)`, `Minus` carries `(−sin θ, cos θ)`; for
/// identical oscillators they are `(x1 + x2)/√2` and `(x2 − x1)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalMode {
    Plus,
    Minus,
}

impl NormalMode {
    pub fn index(self) -> usize {
        match self {
            NormalMode::Plus => 0,
            NormalMode::Minus => 1,
        }
    }
}

/// Orthogonal rotation diagonalizing the stiffness matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalModeBasis {
    pub theta: f64,
    pub omega_plus: f64,
    pub omega_minus: f64,
    /// Frequencies of the `[Plus, Minus]` slots. Equal to
    /// `[omega_plus, omega_minus]` unless the rotation is the identity on
    /// detuned oscillators with `ω1 < ω2`.
    pub mode_frequencies: [f64; 2],
}

impl NormalModeBasis {
    pub fn frequency(&self, mode: NormalMode) -> f64 {
        self.mode_frequencies[mode.index()]
    }
}

/// Normal modes of `pair`. `θ ∈ [0, π/2)`, `θ = π/4` for identical
/// oscillators and `θ → 0` for `ω2 > ω1` as `λ → 0`.
pub fn normal_mode_basis(pair: &OscillatorPair) -> Result<NormalModeBasis> {
    pair.validate()?;
    let (w1sq, w2sq, lambda) = (pair.omega1.powi(2), pair.omega2.powi(2), pair.lambda);
    let half_trace = (w1sq + w2sq) / 2.0;
    let radius = (((w1sq - w2sq) / 2.0).powi(2) + lambda * lambda).sqrt();
    let minus_sq = half_trace - radius;
    if minus_sq <= 0.0 {
        return Err(Error::UnstablePair {
            lambda_sq: lambda * lambda,
            bound: w1sq * w2sq,
        });
    }
    let theta = if w1sq == w2sq {
        FRAC_PI_4
    } else {
        let t = 0.5 * (2.0 * lambda / (w1sq - w2sq)).atan();
        if t < 0.0 {
            t + std::f64::consts::FRAC_PI_2
        } else {
            t
        }
    };
    let (s, c) = theta.sin_cos();
    let plus_sq = c * c * w1sq + 2.0 * c * s * lambda + s * s * w2sq;
    let other_sq = s * s * w1sq - 2.0 * c * s * lambda + c * c * w2sq;
    Ok(NormalModeBasis {
        theta,
        omega_plus: (half_trace + radius).sqrt(),
        omega_minus: minus_sq.sqrt(),
        mode_frequencies: [plus_sq.sqrt(), other_sq.sqrt()],
    })
}

/// Block rotation by `theta` acting identically on positions and momenta:
/// `(x1, p1, x2, p2) → (X+, P+, X−, P−)`.
pub fn mode_rotation(theta: f64) -> Matrix4<f64> {
    let (s, c) = theta.sin_cos();
    #[rustfmt::skip]
    let r = Matrix4::new(
        c, 0.0, s, 0.0,
        0.0, c, 0.0, s,
        -s, 0.0, c, 0.0,
        0.0, -s, 0.0, c,
    );
    r
}

/// Rotates a state by an arbitrary angle (see [`mode_rotation`]).
pub fn rotate_by_angle(state: &CovarianceState, theta: f64) -> CovarianceState {
    state.congruence(&mode_rotation(theta))
}

/// Expresses `state` in the `(X+, P+, X−, P−)` frame of `basis`.
pub fn rotate_to_modes(state: &CovarianceState, basis: &NormalModeBasis) -> CovarianceState {
    rotate_by_angle(state, basis.theta)
}
