use thiserror::Error;

use crate::groups::Group;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(Group, Group),

    #[error("{0} is infinite; this operation needs element enumeration")]
    InfiniteGroup(Group),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("unknown representation `{name}` for {group}")]
    UnknownRepresentation { name: String, group: Group },

    #[error("inconsistent switching plan: {0}")]
    InconsistentPlan(String),

    #[error("quaternion {0} is not invertible")]
    ZeroQuaternion(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
