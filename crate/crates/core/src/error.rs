use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by state construction, dynamics and the run front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("covariance matrix is not symmetric (max asymmetry {asymmetry:.3e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("covariance matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("covariance matrix violates the uncertainty principle: smallest symplectic eigenvalue {nu_minus:.12} < 1/2")]
    Unphysical { nu_minus: f64 },

    #[error("unstable oscillator pair: lambda² < ω1²ω2² violated (lambda² = {lambda_sq}, ω1²ω2² = {bound})")]
    UnstablePair { lambda_sq: f64, bound: f64 },

    #[error("invalid bath: {0}")]
    InvalidBath(String),

    #[error("Lyapunov system is singular (an undamped mode is present); use the asymptotic-state construction instead")]
    SingularLyapunov,

    #[error("configuration outside the identical-oscillator, common-bath, uncoupled regime: {0}")]
    UnsupportedRegime(String),

    #[error("physicality lost at t = {time}: smallest symplectic eigenvalue {nu_minus:.12} < 1/2 - 1e-6 (step too large or generator unphysical)")]
    PhysicalityAbort { time: f64, nu_minus: f64 },

    #[error("config error in {location}: {message}")]
    Config { location: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error on {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    ///
    /// `2` is reserved for runtime physicality aborts; every other failure is
    /// reported as a configuration error (`1`).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::PhysicalityAbort { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
