//! Indicators of a two-mode squeezed vacuum as the squeezing grows.

use twinbath::{
    gaussian_discord, log_negativity, mutual_information, tms_state, twin_variance, Party,
};

fn main() -> twinbath::Result<()> {
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>12}",
        "r", "EN", "discord", "I", "d"
    );
    for step in 0..=6 {
        let r = 0.5 * step as f64;
        let state = tms_state(r)?;
        println!(
            "{r:>5.2} {:>10.5} {:>10.5} {:>10.5} {:>12.5}",
            log_negativity(&state),
            gaussian_discord(&state, Party::Second),
            mutual_information(&state),
            twin_variance(&state),
        );
    }
    Ok(())
}
