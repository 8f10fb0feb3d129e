//! Entanglement and twin correlations die in finite time when every mode
//! is damped, while discord only decays.

use twinbath::config::preset;
use twinbath::runner::evolve_indicators;

fn main() -> twinbath::Result<()> {
    for name in ["fig1_left", "fig1_right"] {
        let series = evolve_indicators(&preset(name)?)?;
        let death = |column: fn(&twinbath::IndicatorRecord) -> f64| {
            series
                .iter()
                .find(|(_, r)| column(r) == 0.0)
                .map(|(t, _)| t)
        };
        let (_, last) = series.iter().last().unwrap();
        println!("{name}:");
        println!(
            "  entanglement gone at t = {:?}",
            death(|r| r.log_negativity)
        );
        println!(
            "  twin correlations gone at t = {:?}",
            death(|r| r.d_display())
        );
        println!("  discord at t_end = {:.3e}", last.discord);
    }
    Ok(())
}
