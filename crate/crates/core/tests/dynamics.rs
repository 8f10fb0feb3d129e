mod common;

use common::bath;
use nalgebra::Matrix2;
use twinbath::config::{preset, PRESETS};
use twinbath::{
    build_generator, evolve, gaussian_discord, mutual_information, steady_state, tms_state,
    BathTopology, Error, OscillatorPair, Party,
};

fn thermal_variance(omega: f64, temperature: f64) -> f64 {
    if temperature == 0.0 {
        0.5
    } else {
        0.5 / (omega / (2.0 * temperature)).tanh()
    }
}

#[test]
fn detuned_common_bath_relaxes_to_lyapunov_solution() {
    let pair = OscillatorPair::new(1.0, 1.2, 0.0).unwrap();
    let common = bath(BathTopology::Common, 1.0);
    let generator = build_generator(&pair, &common).unwrap();
    let steady = steady_state(&generator).unwrap();
    let dt = 0.005 / generator.omega_plus();
    let trajectory = evolve(
        &tms_state(2.0).unwrap(),
        &generator,
        30.0 / common.gamma0,
        dt,
        10_000,
    )
    .unwrap();
    let (_, last) = trajectory.last().unwrap();
    let mismatch = (last.matrix() - steady.matrix()).amax();
    assert!(mismatch < 1e-8, "evolve vs Lyapunov: {mismatch:e}");
    for (slot, omega) in [(0, 1.0), (1, 1.2)] {
        let expected = Matrix2::identity() * thermal_variance(omega, 1.0);
        let gap = (steady.block(slot, slot) - expected).amax();
        assert!(gap < 5.0 * common.gamma0, "oscillator {slot}: {gap}");
    }
}

#[test]
fn separate_baths_thermalize() {
    let pair = OscillatorPair::identical(1.0).unwrap();
    for temperature in [0.0, 0.3, 1.0] {
        let separate = bath(BathTopology::Separate, temperature);
        let steady = steady_state(&build_generator(&pair, &separate).unwrap()).unwrap();
        let expected = nalgebra::Matrix4::identity() * thermal_variance(1.0, temperature);
        let gap = (steady.matrix() - expected).amax();
        assert!(gap < 5.0 * separate.gamma0, "T = {temperature}: {gap}");
    }
}

#[test]
fn steady_state_refuses_undamped_mode() {
    let pair = OscillatorPair::identical(1.0).unwrap();
    let generator = build_generator(&pair, &bath(BathTopology::Common, 1.0)).unwrap();
    assert!(generator.dfs_mode.is_some());
    assert!(matches!(
        steady_state(&generator),
        Err(Error::SingularLyapunov)
    ));
}

#[test]
fn presets_stay_physical() {
    for (name, _) in PRESETS {
        let config = preset(name).unwrap();
        let generator = build_generator(&config.pair, &config.bath).unwrap();
        let trajectory = evolve(
            &tms_state(config.initial_r).unwrap(),
            &generator,
            config.t_end,
            config.dt,
            config.sample_stride,
        )
        .unwrap();
        assert!(
            trajectory.times.windows(2).all(|w| w[0] < w[1]),
            "{name}: times not increasing"
        );
        for (t, state) in trajectory.iter() {
            let (nu_minus, _) = state.symplectic_eigenvalues();
            assert!(
                nu_minus >= 0.5 - 1e-6,
                "{name} at t = {t}: nu_minus = {nu_minus}"
            );
            let discord = gaussian_discord(state, Party::Second);
            assert!(
                discord <= mutual_information(state) + 1e-9,
                "{name} at t = {t}"
            );
        }
    }
}
