//! Normal-mode frequencies and mixing angle of a coupled pair.

use twinbath::{normal_mode_basis, rotate_to_modes, tms_state, OscillatorPair};

fn main() -> twinbath::Result<()> {
    for (omega2, lambda) in [(1.0, 0.0), (1.0, 0.2), (1.2, 0.0), (1.2, 0.3)] {
        let pair = OscillatorPair::new(1.0, omega2, lambda)?;
        let basis = normal_mode_basis(&pair)?;
        println!(
            "ω2 = {omega2:.1}, λ = {lambda:.1}: θ = {:.4}, Ω+ = {:.4}, Ω- = {:.4}",
            basis.theta, basis.omega_plus, basis.omega_minus
        );
    }

    // A two-mode squeezed state is a product of single-mode squeezed
    // states in the symmetric/antisymmetric basis.
    let basis = normal_mode_basis(&OscillatorPair::identical(1.0)?)?;
    let modes = rotate_to_modes(&tms_state(1.0)?, &basis);
    println!("tms_state(1) in normal modes:\n{:.5}", modes.matrix());
    Ok(())
}
