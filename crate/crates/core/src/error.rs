use thiserror::Error;

/// Errors raised while configuring or running a solver.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    Grid(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("inadmissible state at {location}: {detail}")]
    Inadmissible { location: String, detail: String },

    #[error("non-finite value at {location}")]
    NonFinite { location: String },

    #[error("numerical abort at step {step} (t = {time}): {detail}")]
    Aborted { step: usize, time: f64, detail: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// `true` for errors caused by the input configuration rather than the numerics.
    pub fn is_config(&self) -> bool {
        matches!(self, Error::Config(_) | Error::Grid(_))
    }

    /// `true` for errors raised by the time evolution (bad states, NaNs).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Inadmissible { .. } | Error::NonFinite { .. } | Error::Aborted { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
