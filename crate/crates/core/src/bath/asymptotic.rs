use std::f64::consts::FRAC_PI_4;

use nalgebra::{Matrix2, Matrix4};

use super::equilibrium::damped_mode_moments;
use super::{BathConfig, BathTopology};
use crate::error::{Error, Result};
use crate::gaussian::{rotate_by_angle, rotation2, CovarianceState, OscillatorPair};

/// Long-time orbit of identical uncoupled oscillators in a common bath: the
/// damped plus mode at equilibrium, the undamped minus mode rotating freely.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticOrbit {
    plus: Matrix2<f64>,
    minus: Matrix2<f64>,
}

impl AsymptoticOrbit {
    pub fn new(
        pair: &OscillatorPair,
        bath: &BathConfig,
        initial: &CovarianceState,
    ) -> Result<Self> {
        if bath.topology != BathTopology::Common || !pair.is_identical() || pair.lambda != 0.0 {
            return Err(Error::UnsupportedRegime(format!(
                "topology {:?}, ω1 = {}, ω2 = {}, λ = {}",
                bath.topology, pair.omega1, pair.omega2, pair.lambda
            )));
        }
        bath.validate(pair)?;
        let (u, w) = damped_mode_moments(
            pair.omega1,
            2.0 * bath.gamma0,
            bath.cutoff,
            bath.temperature,
        );
        Ok(AsymptoticOrbit {
            plus: Matrix2::new(u, 0.0, 0.0, w),
            minus: rotate_by_angle(initial, FRAC_PI_4).block(1, 1),
        })
    }

    /// `(X+, P+)` covariance block.
    pub fn plus_block(&self) -> Matrix2<f64> {
        self.plus
    }

    /// `(X−, P−)` covariance block after free rotation by `phase`.
    pub fn minus_block(&self, phase: f64) -> Matrix2<f64> {
        let r = rotation2(phase);
        r * self.minus * r.transpose()
    }

    /// State on the orbit at free-mode angle `phase`, in the oscillator frame.
    pub fn state_at(&self, phase: f64) -> CovarianceState {
        let mut modes = Matrix4::zeros();
        modes.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.plus);
        modes
            .fixed_view_mut::<2, 2>(2, 2)
            .copy_from(&self.minus_block(phase));
        rotate_by_angle(&CovarianceState::trusted(modes), -FRAC_PI_4)
    }
}

/// Asymptotic state reached from `initial` at free-mode angle `phase`.
///
/// The plus mode relaxes to the equilibrium state of a damped oscillator
/// (slightly position-squeezed at low temperature), the minus mode keeps its
/// initial block up to a rotation, and the two modes are uncorrelated.
pub fn asymptotic_state(
    pair: &OscillatorPair,
    bath: &BathConfig,
    initial: &CovarianceState,
    phase: f64,
) -> Result<CovarianceState> {
    Ok(AsymptoticOrbit::new(pair, bath, initial)?.state_at(phase))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::tms_state;
    use std::f64::consts::PI;

    const GAMMA0: f64 = 0.02 / PI;

    fn common(temperature: f64) -> BathConfig {
        BathConfig {
            topology: BathTopology::Common,
            gamma0: GAMMA0,
            temperature,
            cutoff: 20.0,
        }
    }

    fn mode_frame(s: &CovarianceState) -> Matrix4<f64> {
        *rotate_by_angle(s, FRAC_PI_4).matrix()
    }

    #[test]
    fn vacuum_start() {
        let pair = OscillatorPair::identical(1.0).unwrap();
        let thermal = 0.5 / 0.5f64.tanh();
        for phase in [0.0, 1.0, 4.0] {
            let m = mode_frame(
                &asymptotic_state(&pair, &common(1.0), &tms_state(0.0).unwrap(), phase).unwrap(),
            );
            assert!((m[(0, 0)] - thermal).abs() < 5.0 * GAMMA0);
            assert!((m[(1, 1)] - thermal).abs() < 5.0 * GAMMA0);
            assert!((m.fixed_view::<2, 2>(2, 2) - Matrix2::identity() * 0.5).amax() < 1e-14);
        }
    }

    #[test]
    fn squeezed_start_at_zero_temperature() {
        let pair = OscillatorPair::identical(1.0).unwrap();
        let m = mode_frame(
            &asymptotic_state(&pair, &common(0.0), &tms_state(2.0).unwrap(), 0.0).unwrap(),
        );
        assert!((m[(2, 2)] - (-4f64).exp() / 2.0).abs() < 1e-12);
        assert!((m[(3, 3)] - 4f64.exp() / 2.0).abs() < 1e-10);
        assert!((m[(0, 0)] - 0.5).abs() < 5.0 * GAMMA0);
        assert!((m[(1, 1)] - 0.5).abs() < 5.0 * GAMMA0);
        assert!(m[(0, 0)] * m[(1, 1)] >= 0.25);
    }

    #[test]
    fn cross_blocks_vanish() {
        let pair = OscillatorPair::identical(1.0).unwrap();
        let initial = tms_state(1.3).unwrap().local_rotation(0.4, -0.2);
        for phase in [0.0, 0.7, 2.0, 5.5] {
            let m = mode_frame(&asymptotic_state(&pair, &common(0.3), &initial, phase).unwrap());
            assert!(m.fixed_view::<2, 2>(0, 2).amax() < 1e-14);
            assert!(m[(0, 1)].abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_other_regimes() {
        let initial = tms_state(1.0).unwrap();
        let detuned = OscillatorPair::new(1.0, 1.2, 0.0).unwrap();
        assert!(matches!(
            asymptotic_state(&detuned, &common(1.0), &initial, 0.0),
            Err(Error::UnsupportedRegime(_))
        ));
        let coupled = OscillatorPair::new(1.0, 1.0, 0.2).unwrap();
        assert!(asymptotic_state(&coupled, &common(1.0), &initial, 0.0).is_err());
        let mut separate = common(1.0);
        separate.topology = BathTopology::Separate;
        let pair = OscillatorPair::identical(1.0).unwrap();
        assert!(asymptotic_state(&pair, &separate, &initial, 0.0).is_err());
    }
}
