use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HnkError {
    /// Caller supplied arguments outside an operation's domain.
    #[error("usage error: {0}")]
    Usage(String),
    /// A brute-force operation was asked to work on a graph above the vertex cap.
    #[error("refusing: graph has {vertices} vertices, above the search cap of {cap}")]
    SizeCap { vertices: usize, cap: usize },
    /// The whole graph is disconnected; the caller should pick a component.
    #[error("graph H({n},{k}) is disconnected; use the odd or even component")]
    Disconnected { n: usize, k: usize },
    /// Geodesic enumeration would exceed the path-count cap.
    #[error("refusing: more than {cap} geodesics of length {length}")]
    PathCap { length: usize, cap: usize },
    /// A construction that must hold by theory failed its pointwise check.
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, HnkError>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(HnkError::Usage(msg.into()))
}
