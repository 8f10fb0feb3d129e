//! Stationary states from the Lyapunov equation.

use twinbath::{build_generator, steady_state, BathConfig, BathTopology, OscillatorPair};

fn main() -> twinbath::Result<()> {
    let bath = |topology, temperature| BathConfig {
        topology,
        gamma0: 0.02 / std::f64::consts::PI,
        temperature,
        cutoff: 20.0,
    };
    let cases = [
        (
            "identical, separate baths, T = 1",
            OscillatorPair::identical(1.0)?,
            bath(BathTopology::Separate, 1.0),
        ),
        (
            "detuned, common bath, T = 1",
            OscillatorPair::new(1.0, 1.2, 0.0)?,
            bath(BathTopology::Common, 1.0),
        ),
        (
            "identical, common bath, T = 1",
            OscillatorPair::identical(1.0)?,
            bath(BathTopology::Common, 1.0),
        ),
    ];
    for (label, pair, bath) in cases {
        match steady_state(&build_generator(&pair, &bath)?) {
            Ok(state) => println!("{label}:\n{:.6}", state.matrix()),
            Err(e) => println!("{label}: {e}"),
        }
    }
    println!("Gibbs variance at T = 1: {:.6}", 0.5 / 0.5f64.tanh());
    Ok(())
}
