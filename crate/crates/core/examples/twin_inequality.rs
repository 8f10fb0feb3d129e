//! Sub-Poissonian twin correlations along the asymptotic orbit: the
//! Wick value of d next to the normal-mode variance inequality.

use twinbath::phase::{asymptotic_twin_predicate, twin_inequality_margin};
use twinbath::{
    asymptotic_state, tms_state, twin_variance, AsymptoticOrbit, BathConfig, BathTopology,
    OscillatorPair,
};

fn main() -> twinbath::Result<()> {
    let pair = OscillatorPair::identical(1.0)?;
    let bath = BathConfig {
        topology: BathTopology::Common,
        gamma0: 0.02 / std::f64::consts::PI,
        temperature: 0.1,
        cutoff: 20.0,
    };
    let initial = tms_state(2.0)?;
    let orbit = AsymptoticOrbit::new(&pair, &bath, &initial)?;
    println!("{:>6} {:>12} {:>12}", "phase", "d", "margin");
    for k in 0..12 {
        let phase = k as f64 * std::f64::consts::PI / 12.0;
        let d = twin_variance(&asymptotic_state(&pair, &bath, &initial, phase)?);
        println!(
            "{phase:>6.3} {d:>12.5} {:>12.5}",
            twin_inequality_margin(&orbit, phase)
        );
    }

    for temperature in [0.05, 0.1, 0.2, 0.4] {
        let verdict = asymptotic_twin_predicate(2.0, temperature, &pair, &bath)?;
        println!(
            "T = {temperature}: twin = {}, min d = {:.5}",
            verdict.twin, verdict.min_d
        );
    }
    Ok(())
}
