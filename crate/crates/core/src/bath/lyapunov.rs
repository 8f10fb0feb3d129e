use nalgebra::{Matrix4, SMatrix, SVector};

use super::Generator;
use crate::error::{Error, Result};
use crate::gaussian::CovarianceState;

const CONDITION_FLOOR: f64 = 1e-12;

/// Upper-triangle index pairs of a symmetric 4×4 matrix.
fn unknowns() -> [(usize, usize); 10] {
    let mut pairs = [(0, 0); 10];
    let mut k = 0;
    for i in 0..4 {
        for j in i..4 {
            pairs[k] = (i, j);
            k += 1;
        }
    }
    pairs
}

/// Stationary state `Aσ + σAᵀ + D = 0`, solved directly on the ten
/// independent entries of `σ`.
pub fn steady_state(gen: &Generator) -> Result<CovarianceState> {
    if gen.dfs_mode.is_some() {
        return Err(Error::SingularLyapunov);
    }
    let pairs = unknowns();
    let position = |i: usize, j: usize| {
        pairs
            .iter()
            .position(|&p| p == (i.min(j), i.max(j)))
            .unwrap()
    };
    let a = &gen.drift;

    let mut system = SMatrix::<f64, 10, 10>::zeros();
    let mut rhs = SVector::<f64, 10>::zeros();
    for (row, &(i, j)) in pairs.iter().enumerate() {
        for k in 0..4 {
            system[(row, position(k, j))] += a[(i, k)];
            system[(row, position(i, k))] += a[(j, k)];
        }
        rhs[row] = -gen.diffusion[(i, j)];
    }

    let singular = system.singular_values();
    if singular.min() <= CONDITION_FLOOR * singular.max() {
        return Err(Error::SingularLyapunov);
    }
    let solution = system.lu().solve(&rhs).ok_or(Error::SingularLyapunov)?;
    let mut sigma = Matrix4::zeros();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        sigma[(i, j)] = solution[k];
        sigma[(j, i)] = solution[k];
    }
    CovarianceState::new(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bath::{build_generator, BathConfig, BathTopology};
    use crate::gaussian::{mode_rotation, OscillatorPair};
    use std::f64::consts::PI;

    const GAMMA0: f64 = 0.02 / PI;

    fn bath(topology: BathTopology, temperature: f64) -> BathConfig {
        BathConfig {
            topology,
            gamma0: GAMMA0,
            temperature,
            cutoff: 20.0,
        }
    }

    fn thermal(omega: f64, t: f64) -> f64 {
        if t == 0.0 {
            0.5
        } else {
            0.5 / (omega / (2.0 * t)).tanh()
        }
    }

    #[test]
    fn separate_bath_thermalizes() {
        for t in [0.0, 1.0] {
            let gen = build_generator(
                &OscillatorPair::identical(1.0).unwrap(),
                &bath(BathTopology::Separate, t),
            )
            .unwrap();
            let s = steady_state(&gen).unwrap();
            let expected = Matrix4::identity() * thermal(1.0, t);
            assert!((s.matrix() - expected).amax() < 5.0 * GAMMA0);
        }
    }

    #[test]
    fn detuned_common_mode_blocks_are_thermal() {
        let pair = OscillatorPair::new(1.0, 1.2, 0.0).unwrap();
        let gen = build_generator(&pair, &bath(BathTopology::Common, 1.0)).unwrap();
        let s = steady_state(&gen).unwrap();
        let modes = mode_rotation(gen.basis.theta)
            * s.matrix()
            * mode_rotation(gen.basis.theta).transpose();
        for (k, omega) in gen.basis.mode_frequencies.iter().enumerate() {
            for q in 0..2 {
                let v = modes[(2 * k + q, 2 * k + q)];
                assert!(
                    (v - thermal(*omega, 1.0)).abs() < 5.0 * GAMMA0,
                    "mode {k}: {v}"
                );
            }
        }
    }

    #[test]
    fn dfs_is_singular() {
        let gen = build_generator(
            &OscillatorPair::identical(1.0).unwrap(),
            &bath(BathTopology::Common, 1.0),
        )
        .unwrap();
        assert!(matches!(steady_state(&gen), Err(Error::SingularLyapunov)));
    }

    #[test]
    fn residual_vanishes() {
        let pair = OscillatorPair::new(1.0, 1.3, 0.25).unwrap();
        let gen = build_generator(&pair, &bath(BathTopology::Common, 0.4)).unwrap();
        let s = *steady_state(&gen).unwrap().matrix();
        let residual = gen.drift * s + s * gen.drift.transpose() + gen.diffusion;
        assert!(residual.amax() < 1e-14);
    }
}
