use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("a code segment contains no digits")]
    EmptyCode,
    #[error("unexpected character {0:?}: codes contain only 2 and 3")]
    BadDigit(char),
    #[error("expected a single code, found a list of {0}")]
    NotSingle(usize),
    #[error("malformed operation: {0}")]
    BadOp(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("bend {b} is invalid for length {l}: must be even and at most l")]
    BadBend { l: usize, b: usize },
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("type III blocks overlap")]
    OverlappingBlocks,
    #[error("sequence index {0} out of range")]
    BadIndex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatchError {
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("rotation system is not planar (V - E + F = {0})")]
    NotPlanar(i64),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("inner face of length {len} at vertices {face:?}")]
    BadFaceLength { face: Vec<usize>, len: usize },
    #[error("vertex {vertex} has invalid degree {degree}")]
    BadDegree { vertex: usize, degree: usize },
    #[error("designated outer half-edge {0}->{1} does not exist")]
    BadOuter(usize, usize),
    #[error("face is not a 5-face")]
    NotFiveFace,
    #[error("path is not a 1-bend shortest path")]
    NotOneBend,
    #[error("path does not end on the face")]
    PathNotIncident,
    #[error("anchor does not match the operation's pattern: {0}")]
    AnchorMismatch(String),
    #[error("malformed patch record: {0}")]
    BadRecord(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("hexagon-only search requested for a code with f5 = {0}")]
    Inconsistent(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("f5 = {0} > 5 is only supported in conjecture mode")]
    Unsupported(i64),
    #[error("node limit of {0} reached before the search finished")]
    NodeLimit(u64),
    #[error(transparent)]
    Patch(#[from] PatchError),
    #[error(transparent)]
    Op(#[from] OpError),
}
