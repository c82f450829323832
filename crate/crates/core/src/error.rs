use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group label: {0}")]
    InvalidLabel(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid embedding `{id}`: {reason}")]
    InvalidEmbedding { id: String, reason: String },
    #[error("invalid lattice entry `{id}`: {reason}")]
    InvalidLattice { id: String, reason: String },
    #[error("incomparable diagrams: {0}")]
    Incomparable(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no compatible case: {0}")]
    NoCompatibleCase(String),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn embedding(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidEmbedding {
            id: id.into(),
            reason: reason.into(),
        }
    }
}
