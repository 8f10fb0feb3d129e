//! Identical oscillators in a common bath: the antisymmetric mode never
//! touches the bath, so its determinant is frozen while the symmetric
//! mode thermalizes.

use twinbath::{
    build_generator, evolve, normal_mode_basis, rotate_to_modes, tms_state, BathConfig,
    BathTopology, OscillatorPair,
};

fn main() -> twinbath::Result<()> {
    let pair = OscillatorPair::identical(1.0)?;
    let bath = BathConfig {
        topology: BathTopology::Common,
        gamma0: 0.02 / std::f64::consts::PI,
        temperature: 1.0,
        cutoff: 20.0,
    };
    let generator = build_generator(&pair, &bath)?;
    println!("undamped mode: {:?}", generator.dfs_mode);
    let basis = normal_mode_basis(&pair)?;
    let trajectory = evolve(
        &tms_state(2.0)?,
        &generator,
        400.0,
        0.005 / generator.omega_plus(),
        8000,
    )?;
    println!("{:>7} {:>14} {:>14}", "t", "det plus", "det minus");
    for (t, state) in trajectory.iter() {
        let modes = rotate_to_modes(state, &basis);
        println!(
            "{t:>7.1} {:>14.8} {:>14.8}",
            modes.block(0, 0).determinant(),
            modes.block(1, 1).determinant()
        );
    }
    Ok(())
}
