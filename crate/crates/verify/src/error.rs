use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config does not match the schema: {0}")]
    Schema(String),
    #[error("invalid config: {0}")]
    Invalid(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Geometry(#[from] valharm_geometry::Error),
    #[error("report output failed: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
