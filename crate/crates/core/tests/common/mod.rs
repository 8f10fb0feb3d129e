#![allow(dead_code)]

use std::f64::consts::PI;

use nalgebra::Matrix4;
use twinbath::{BathConfig, BathTopology, CovarianceState};

pub const GAMMA0: f64 = 0.02 / PI;

pub fn bath(topology: BathTopology, temperature: f64) -> BathConfig {
    BathConfig {
        topology,
        gamma0: GAMMA0,
        temperature,
        cutoff: 20.0,
    }
}

/// Joint photon-number distribution `p[n1][n2]` on a truncated basis.
pub type PhotonDistribution = Vec<Vec<f64>>;

/// Two-mode squeezed vacuum: `p(n, n) = (1 − μ) μ^n`, `μ = tanh² r`.
pub fn tms_distribution(r: f64, cutoff: usize) -> PhotonDistribution {
    let mu = r.tanh().powi(2);
    let mut p = vec![vec![0.0; cutoff + 1]; cutoff + 1];
    for (n, row) in p.iter_mut().enumerate() {
        row[n] = (1.0 - mu) * mu.powi(n as i32);
    }
    p
}

/// Single-mode thermal distribution with mean `nbar`.
pub fn thermal_distribution(nbar: f64, cutoff: usize) -> Vec<f64> {
    (0..=cutoff)
        .map(|n| nbar.powi(n as i32) / (nbar + 1.0).powi(n as i32 + 1))
        .collect()
}

/// Squeezed vacuum amplitudes: `c_{2k} = (−tanh r)^k √((2k)!) / (2^k k! √cosh r)`.
pub fn squeezed_distribution(r: f64, cutoff: usize) -> Vec<f64> {
    let t = r.tanh();
    let mut p = vec![0.0; cutoff + 1];
    let mut amplitude = 1.0 / r.cosh().sqrt();
    for k in 0..=cutoff / 2 {
        p[2 * k] = amplitude * amplitude;
        // c_{2k+2} / c_{2k} = −t √((2k+1)(2k+2)) / (2(k+1))
        let kf = k as f64;
        amplitude *= -t * ((2.0 * kf + 1.0) * (2.0 * kf + 2.0)).sqrt() / (2.0 * (kf + 1.0));
    }
    p
}

pub fn product(p1: &[f64], p2: &[f64]) -> PhotonDistribution {
    p1.iter()
        .map(|a| p2.iter().map(|b| a * b).collect())
        .collect()
}

/// `⟨:(Δ(n1 − n2))²:⟩` summed directly over photon numbers.
pub fn normal_ordered_twin(p: &PhotonDistribution) -> f64 {
    let (mut n1, mut n2, mut fourth) = (0.0, 0.0, 0.0);
    for (a, row) in p.iter().enumerate() {
        for (b, &w) in row.iter().enumerate() {
            let (a, b) = (a as f64, b as f64);
            n1 += w * a;
            n2 += w * b;
            fourth += w * (a * (a - 1.0) + b * (b - 1.0) - 2.0 * a * b);
        }
    }
    fourth - (n1 - n2).powi(2)
}

/// Symplectic matrix built from local rotations and squeezers, a beam
/// splitter and a two-mode squeezer.
pub fn random_symplectic(angles: [f64; 5], squeeze: [f64; 3]) -> Matrix4<f64> {
    let rot = |a: f64, b: f64| {
        let mut m = Matrix4::zeros();
        let (sa, ca) = a.sin_cos();
        let (sb, cb) = b.sin_cos();
        m[(0, 0)] = ca;
        m[(0, 1)] = sa;
        m[(1, 0)] = -sa;
        m[(1, 1)] = ca;
        m[(2, 2)] = cb;
        m[(2, 3)] = sb;
        m[(3, 2)] = -sb;
        m[(3, 3)] = cb;
        m
    };
    let local_squeeze = Matrix4::from_diagonal(&nalgebra::Vector4::new(
        (-squeeze[0]).exp(),
        squeeze[0].exp(),
        (-squeeze[1]).exp(),
        squeeze[1].exp(),
    ));
    let (s, c) = angles[4].sin_cos();
    #[rustfmt::skip]
    let splitter = Matrix4::new(
        c, 0.0, s, 0.0,
        0.0, c, 0.0, s,
        -s, 0.0, c, 0.0,
        0.0, -s, 0.0, c,
    );
    let (ch, sh) = (squeeze[2].cosh(), squeeze[2].sinh());
    #[rustfmt::skip]
    let two_mode = Matrix4::new(
        ch, 0.0, sh, 0.0,
        0.0, ch, 0.0, -sh,
        sh, 0.0, ch, 0.0,
        0.0, -sh, 0.0, ch,
    );
    rot(angles[0], angles[1]) * local_squeeze * splitter * two_mode * rot(angles[2], angles[3])
}

pub fn random_state(n1: f64, n2: f64, angles: [f64; 5], squeeze: [f64; 3]) -> CovarianceState {
    CovarianceState::thermal(n1, n2)
        .unwrap()
        .transformed(&random_symplectic(angles, squeeze))
        .unwrap()
}

/// Symplectic eigenvalues from the complex spectrum of `Ωσ`.
pub fn symplectic_oracle(sigma: &Matrix4<f64>) -> (f64, f64) {
    let omega = twinbath::gaussian::symplectic_form();
    let mut moduli: Vec<f64> = (omega * sigma)
        .complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .collect();
    moduli.sort_by(f64::total_cmp);
    (moduli[0], moduli[3])
}
