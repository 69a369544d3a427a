use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Triangle(#[from] mollweide::Error),

    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },

    #[error("output error: {0}")]
    Output(#[from] io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}
