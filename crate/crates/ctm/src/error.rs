use thiserror::Error;

/// Errors surfaced by graph construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    Empty,
    #[error("graph has {n} vertices; the dense color table supports at most {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("pair ({u},{v}) is White but the graph does not allow white edges")]
    WhiteNotAllowed { u: usize, v: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

/// Errors surfaced by the extraction algorithms.
///
/// `Precondition` means the caller violated a stated input contract and the
/// inequality in the message names which one. `StructuralContradiction` means
/// an internal counting guarantee failed; on valid inputs this signals an
/// implementation bug, so tests treat any occurrence as fatal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("structural contradiction: {0}")]
    StructuralContradiction(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn contradiction(msg: impl Into<String>) -> Error {
    Error::StructuralContradiction(msg.into())
}
