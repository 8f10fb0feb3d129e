//! With a decoherence-free mode, entanglement and discord settle on
//! plateaus instead of vanishing.

use twinbath::config::preset;
use twinbath::runner::evolve_indicators;

fn main() -> twinbath::Result<()> {
    for name in ["fig2_left", "fig2_right"] {
        let series = evolve_indicators(&preset(name)?)?;
        println!("{name}:");
        for (t, r) in series.iter().step_by(series.times.len() / 8) {
            println!(
                "  t = {t:>6.1}  EN = {:.4}  discord = {:.4}  d = {:>9.4}",
                r.log_negativity, r.discord, r.twin_d
            );
        }
    }
    Ok(())
}
