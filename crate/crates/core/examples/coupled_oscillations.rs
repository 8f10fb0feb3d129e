//! Coupled identical oscillators: the free mode beats against the
//! thermalized one and the indicators keep oscillating.

use twinbath::config::preset;
use twinbath::runner::evolve_indicators;

fn main() -> twinbath::Result<()> {
    let series = evolve_indicators(&preset("fig3")?)?;
    let tail = series.records.len() - 40;
    for (t, r) in series.iter().skip(tail) {
        let bar = "#".repeat((r.log_negativity * 12.0) as usize);
        println!("{t:>7.2} {:.4} {bar}", r.log_negativity);
    }
    Ok(())
}
