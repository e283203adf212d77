use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Variants are grouped roughly by the module that raises them. The
/// `Internal`, `FamilyViolation` and `Numerical` variants signal that an exact
/// identity failed to hold; they indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph6: bad header byte {0:#04x} (vertex count out of range 0..=62)")]
    BadHeader(u8),
    #[error("graph6: body has {found} bytes, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("graph6: byte {0:#04x} outside 63..=126")]
    BadChar(u8),
    #[error("graph with {0} vertices is too large for this operation")]
    TooLarge(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("invalid edge list: {0}")]
    BadEdgeList(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("the two vertices must be distinct")]
    SameVertex,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("vertices do not lie in a common clique")]
    NotAClique,
    #[error("graph is not 1-walk-regular")]
    NotOneWalkRegular,
    #[error("matrix is not symmetric (asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("inputs are not cospectral")]
    NotCospectral,
    #[error("matched-vector condition failed")]
    ConditionFailed,
    #[error("Gram matrices differ (max deviation {0:e})")]
    GramMismatch(f64),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("family violation: {0}")]
    FamilyViolation(String),
    #[error("numerical tolerance exceeded: {0}")]
    Numerical(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
