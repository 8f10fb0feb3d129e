use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twinbath::config::{parse_config, preset, RunConfig, PRESETS};
use twinbath::runner::{boundary_path, run_evolve, run_phase_diagram, run_steady};
use twinbath::Error;

#[derive(Parser)]
#[command(
    name = "twinbath",
    version,
    about = "Damped oscillator pairs: entanglement, discord and twin correlations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a two-mode squeezed state and write indicator time series.
    Evolve(Source),
    /// Scan the asymptotic (T, r) phase diagram.
    PhaseDiagram {
        #[command(flatten)]
        source: Source,
        /// Grid shape as TxR, e.g. 60x60.
        #[arg(long, value_name = "TxR")]
        grid: Option<String>,
        /// Worker threads for the scan.
        #[arg(long, value_name = "N", env = "TWINBATH_THREADS")]
        threads: Option<usize>,
    },
    /// Solve for the stationary covariance matrix.
    Steady(Source),
    /// Named parameter sets.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    /// List preset names and descriptions.
    List,
}

#[derive(Args)]
struct Source {
    /// JSON configuration file.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Named preset (ignored keys of a config file fall back to it).
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
    /// Output CSV path.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> twinbath::Result<RunConfig> {
        let mut config =
            match (&self.config, &self.preset) {
                (Some(path), None) => parse_config(path)?,
                (None, Some(name)) => preset(name)?,
                (Some(_), Some(_)) => return Err(Error::Config {
                    location: "arguments".into(),
                    message:
                        "give either --config or --preset (a config file may name a preset itself)"
                            .into(),
                }),
                (None, None) => {
                    return Err(Error::Config {
                        location: "arguments".into(),
                        message: "one of --config or --preset is required".into(),
                    })
                }
            };
        if let Some(out) = &self.out {
            config.output_path = Some(out.clone());
        }
        Ok(config)
    }
}

fn run(cli: Cli) -> twinbath::Result<()> {
    match cli.command {
        Command::Evolve(source) => {
            let config = source.load()?;
            let series = run_evolve(&config)?;
            eprintln!("wrote {} samples", series.times.len());
        }
        Command::PhaseDiagram {
            source,
            grid,
            threads,
        } => {
            let mut config = source.load()?;
            if let Some(shape) = grid {
                config.grid = config.grid.with_shape(&shape)?;
            }
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(n) = threads {
                if n == 0 {
                    return Err(Error::Config {
                        location: "--threads".into(),
                        message: "must be ≥ 1".into(),
                    });
                }
                pool = pool.num_threads(n);
            }
            let pool = pool.build().map_err(|e| Error::Config {
                location: "--threads".into(),
                message: e.to_string(),
            })?;
            let (diagram, _) = pool.install(|| run_phase_diagram(&config))?;
            let out = config
                .output_path
                .as_deref()
                .expect("checked by the runner");
            eprintln!(
                "wrote {} points and {}",
                diagram.points.len(),
                boundary_path(out).display()
            );
        }
        Command::Steady(source) => {
            run_steady(&source.load()?)?;
        }
        Command::Presets {
            action: PresetAction::List,
        } => {
            for (name, description) in PRESETS {
                println!("{name:<11} {description}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
