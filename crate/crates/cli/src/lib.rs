//! File formats, the parallel suite runner and the `grassline` command line.

pub mod app;
pub mod json;
pub mod runner;
pub mod sweep;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Core(#[from] grassline::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
