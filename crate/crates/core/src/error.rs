use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("index {index} out of range (diagram has {len} crossings)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("resource bound exceeded: {what} is {found}, limit {limit}")]
    ResourceBound { what: &'static str, found: usize, limit: usize },

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("catalog error at {location}: {message}")]
    Catalog { location: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by a configured size limit rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceBound { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
