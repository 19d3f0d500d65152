use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no closed form known for {0}")]
    NoClosedForm(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("stepping error: {0}")]
    Step(String),
    #[error("codec error: {0}")]
    Codec(String),
    #[error("message too large: p={p} must be below p_ssv={p_ssv}")]
    MessageTooLarge { p: String, p_ssv: String },
    #[error("invalid key: {0}")]
    InvalidKey(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
