//! Indicators of quantumness for two-mode Gaussian states.
//!
//! Entropic quantities are in bits. Internally the discord formulas use the
//! convention in which the vacuum covariance is the identity, i.e. they work
//! on `2σ`; the helpers below take determinants in that convention.

use nalgebra::Matrix2;

use crate::gaussian::{symplectic_spectrum, CovarianceState};

/// Which oscillator is measured in the discord optimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Party {
    First,
    #[default]
    Second,
}

/// The four indicators evaluated on one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndicatorRecord {
    pub log_negativity: f64,
    pub discord: f64,
    pub mutual_information: f64,
    pub twin_d: f64,
}

impl IndicatorRecord {
    /// Evaluates all indicators, measuring the second oscillator for discord.
    pub fn evaluate(state: &CovarianceState) -> Self {
        let correlations = Correlations::new(state, Party::Second);
        IndicatorRecord {
            log_negativity: log_negativity(state),
            discord: correlations.discord(),
            mutual_information: correlations.mutual_information(),
            twin_d: twin_variance(state),
        }
    }

    /// `max(0, −d/4)`, the rescaled twin indicator used in figures.
    pub fn d_display(&self) -> f64 {
        (-self.twin_d / 4.0).max(0.0)
    }
}

/// `−log2(2ν̃−)` without clipping at zero; positive iff the state is
/// entangled.
pub fn negativity_exponent(state: &CovarianceState) -> f64 {
    let (nu, _) = symplectic_spectrum(&state.partial_transpose());
    -(2.0 * nu).log2()
}

/// Logarithmic negativity `max(0, −log2(2ν̃−))`.
pub fn log_negativity(state: &CovarianceState) -> f64 {
    negativity_exponent(state).max(0.0)
}

/// Gaussian discord with Gaussian measurements on `measured`.
pub fn gaussian_discord(state: &CovarianceState, measured: Party) -> f64 {
    Correlations::new(state, measured).discord()
}

/// `S(ρ1) + S(ρ2) − S(ρ)`.
pub fn mutual_information(state: &CovarianceState) -> f64 {
    Correlations::new(state, Party::Second).mutual_information()
}

/// Von Neumann entropy of a mode with symplectic eigenvalue `nu`
/// (vacuum 1/2), in bits.
pub fn mode_entropy(nu: f64) -> f64 {
    entropy(2.0 * nu)
}

/// Normal-ordered variance `⟨:(Δ(n1 − n2))²:⟩` from Wick factorization.
/// Negative values certify a non-classical P function.
pub fn twin_variance(state: &CovarianceState) -> f64 {
    let s = state.matrix();
    // ⟨a_i† a_j⟩ and ⟨a_i a_j⟩ as (re, im) pairs.
    let hopping = |i: usize, j: usize| {
        let (xi, pi, xj, pj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
        (
            (s[(xi, xj)] + s[(pi, pj)]) / 2.0,
            (s[(xi, pj)] - s[(pi, xj)]) / 2.0,
        )
    };
    let pairing = |i: usize, j: usize| {
        let (xi, pi, xj, pj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
        (
            (s[(xi, xj)] - s[(pi, pj)]) / 2.0,
            (s[(xi, pj)] + s[(pi, xj)]) / 2.0,
        )
    };
    let norm_sq = |(re, im): (f64, f64)| re * re + im * im;
    let n1 = hopping(0, 0).0 - 0.5;
    let n2 = hopping(1, 1).0 - 0.5;
    n1 * n1 + norm_sq(pairing(0, 0)) + n2 * n2 + norm_sq(pairing(1, 1))
        - 2.0 * (norm_sq(hopping(0, 1)) + norm_sq(pairing(0, 1)))
}

/// `f(x) = ((x+1)/2) log2((x+1)/2) − ((x−1)/2) log2((x−1)/2)` for `x ≥ 1`.
fn entropy(x: f64) -> f64 {
    let plus = (x + 1.0) / 2.0;
    let minus = (x - 1.0) / 2.0;
    let tail = if minus > 0.0 {
        minus * minus.log2()
    } else {
        0.0
    };
    plus * plus.log2() - tail
}

fn entropy_prime(x: f64) -> f64 {
    0.5 * ((x + 1.0) / (x - 1.0)).log2()
}

fn entropy_second(x: f64) -> f64 {
    -1.0 / ((x * x - 1.0) * std::f64::consts::LN_2)
}

/// `g(y) = f(√y)` and its first two derivatives.
fn g(y: f64) -> f64 {
    entropy(y.max(1.0).sqrt())
}

fn g_prime(y: f64) -> f64 {
    let x = y.sqrt();
    entropy_prime(x) / (2.0 * x)
}

fn g_second(y: f64) -> f64 {
    let x = y.sqrt();
    entropy_second(x) / (4.0 * y) - entropy_prime(x) / (4.0 * y * x)
}

fn det2(m: &Matrix2<f64>) -> f64 {
    m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
}

fn adjugate(m: &Matrix2<f64>) -> Matrix2<f64> {
    Matrix2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
}

const SMALL_CORRELATION: f64 = 1e-10;
const MIXED_MARGIN: f64 = 1e-3;
const PURE_MARGIN: f64 = 1e-14;
const DEGENERATE_GAP: f64 = 1e-5;

/// Symplectic invariants of `2σ` arranged with the measured party second.
struct Correlations {
    /// Determinant of the unmeasured block.
    a: f64,
    /// Determinant of the measured block.
    b: f64,
    c: f64,
    det: f64,
    /// `det − a·b`, computed through the Schur complement so that it keeps
    /// full relative accuracy for weakly correlated states.
    excess: f64,
    nu_minus_sq: f64,
    nu_plus_sq: f64,
}

impl Correlations {
    fn new(state: &CovarianceState, measured: Party) -> Self {
        let (kept, probed) = match measured {
            Party::Second => (0, 1),
            Party::First => (1, 0),
        };
        let alpha = state.block(kept, kept) * 2.0;
        let beta = state.block(probed, probed) * 2.0;
        let gamma = state.block(kept, probed) * 2.0;
        let (a, b) = (det2(&alpha), det2(&beta));

        let schur = gamma.transpose() * alpha.try_inverse().unwrap_or_else(Matrix2::zeros) * gamma;
        let excess = a * (det2(&schur) - (adjugate(&beta) * schur).trace());

        let (nu_minus, nu_plus) = symplectic_spectrum(state.matrix());
        let (nu_minus, nu_plus) = (2.0 * nu_minus, 2.0 * nu_plus);
        Correlations {
            a,
            b,
            c: det2(&gamma),
            det: (nu_minus * nu_plus).powi(2),
            excess,
            nu_minus_sq: nu_minus * nu_minus,
            nu_plus_sq: nu_plus * nu_plus,
        }
    }

    /// Shifts of `(Δ/2, Δ²/4 − det)` away from their product-state values.
    fn perturbation(&self) -> (f64, f64) {
        let dm = self.c;
        let dq = self.c * (self.a + self.b) + self.c * self.c - self.excess;
        (dm, dq)
    }

    fn weakly_correlated(&self) -> bool {
        let (dm, dq) = self.perturbation();
        dm.abs() < SMALL_CORRELATION
            && dq.abs() < SMALL_CORRELATION
            && self.a.min(self.b) - 1.0 > MIXED_MARGIN
    }

    fn mutual_information(&self) -> f64 {
        if self.weakly_correlated() {
            let (dm, dq) = self.perturbation();
            let (h_m, h_q) = self.entropy_gradient();
            return -(h_m * dm + h_q * dq);
        }
        g(self.a) + g(self.b) - g(self.nu_minus_sq) - g(self.nu_plus_sq)
    }

    /// Gradient of `(m, q) ↦ g(m + √q) + g(m − √q)` at the product state.
    fn entropy_gradient(&self) -> (f64, f64) {
        let m = (self.a + self.b) / 2.0;
        let s = (self.a - self.b).abs() / 2.0;
        let (up, down) = (g_prime(m + s), g_prime(m - s));
        let h_q = if s < DEGENERATE_GAP * m {
            g_second(m)
        } else {
            (up - down) / (2.0 * s)
        };
        (up + down, h_q)
    }

    fn heterodyne_branch(&self) -> bool {
        self.excess * self.excess <= (1.0 + self.b) * self.c * self.c * (self.a + self.det)
    }

    /// `A − E_min`, the information gained on the unmeasured mode.
    fn conditional_gain(&self) -> f64 {
        let (a, b, c, dx) = (self.a, self.b, self.c, self.excess);
        if self.heterodyne_branch() {
            let bm = b - 1.0;
            let root = (c * c + bm * (a * bm + dx)).max(0.0).sqrt();
            (-2.0 * c * c - bm * dx - 2.0 * c.abs() * root) / (bm * bm)
        } else {
            let r = ((dx - c * c).powi(2) - 4.0 * a * b * c * c).max(0.0);
            (c * c - dx + r.sqrt()) / (2.0 * b)
        }
    }

    fn discord(&self) -> f64 {
        if self.b - 1.0 < PURE_MARGIN {
            return 0.0;
        }
        let gain = self.conditional_gain();
        if self.weakly_correlated() {
            return self.mutual_information() - g_prime(self.a) * gain;
        }
        let e_min = (self.a - gain).max(1.0);
        g(self.b) - g(self.nu_minus_sq) - g(self.nu_plus_sq) + g(e_min)
    }
}
