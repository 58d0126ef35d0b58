use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two objects that must live over the same `[n]` do not.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("empty Richardson variety: {v} is not below {w} in Bruhat order")]
    EmptyRichardson { v: String, w: String },

    #[error("no permutation extends {u} with prefix set {subset}")]
    NoExtension { u: String, subset: String },

    #[error("no unique extremal permutation for {u} with prefix set {subset}")]
    AmbiguousExtension { u: String, subset: String },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An invariant that the theory guarantees was broken.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub(crate) fn check_same_n(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left, right })
    }
}
