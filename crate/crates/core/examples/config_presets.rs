//! Presets and JSON overrides.

use twinbath::config::{parse_config_str, preset, PRESETS};

fn main() -> twinbath::Result<()> {
    for (name, description) in PRESETS {
        let config = preset(name)?;
        println!(
            "{name:<11} T = {:<4} λ = {:<4} t_end = {:>7.1}  {description}",
            config.bath.temperature, config.pair.lambda, config.t_end
        );
    }

    let custom = parse_config_str(
        r#"{"preset": "fig2_left", "temperature": 0.25, "initial_r": 1.5}"#,
        "inline",
    )?;
    println!(
        "\noverride: T = {}, r = {}",
        custom.bath.temperature, custom.initial_r
    );

    match parse_config_str(
        r#"{"omega1": 1, "omega2": 1, "lambda": 1.5, "topology": "common", "temperature": 1}"#,
        "inline",
    ) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
