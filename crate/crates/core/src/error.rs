use thiserror::Error;

/// Errors raised while building instances or running the construction.
///
/// The `NoValidK`, `NoCaseIndex`, `ClaimViolation`, `AssignmentOutOfArc` and
/// `NotAnArc` variants cannot fire on well-formed input. They exist so that
/// an implementation bug surfaces as a typed failure during exhaustive scans.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cycle order {t} is below 3")]
    CycleTooSmall { t: usize },

    #[error("vertex {vertex} is outside 1..={t}")]
    VertexOutOfRange { vertex: i64, t: usize },

    #[error("vertex {vertex} appears more than once")]
    DuplicateVertex { vertex: usize },

    #[error("arc length {length} must lie in 1..{t}")]
    InvalidArcLength { length: usize, t: usize },

    #[error("the doubling map needs an odd cycle, got t = {t}")]
    EvenCycle { t: usize },

    #[error("expected a set of size {expected}, found {found}")]
    WrongSize { expected: usize, found: usize },

    #[error("set contains the edge {u}~{v}")]
    NotIndependent { u: usize, v: usize },

    #[error("the pulled-back set is not a run of consecutive vertices")]
    NotAnArc,

    #[error("cycle order {t} is not 2s+1 for s = {s}")]
    WrongCycleOrder { t: usize, s: usize },

    #[error("vertex set belongs to C_{found}, expected C_{expected}")]
    ContextMismatch { expected: usize, found: usize },

    #[error("every shift in 0..={max} is forbidden")]
    NoValidK { max: usize },

    #[error("shift k = {k} selects no index for its case")]
    NoCaseIndex { k: i64 },

    #[error("monotonicity part ({part}) fails for k = {k} at positions {i} and {j}")]
    ClaimViolation {
        part: u8,
        k: i64,
        i: usize,
        j: usize,
    },

    #[error("position {position} was assigned vertex {vertex} outside its arc")]
    AssignmentOutOfArc { position: usize, vertex: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Wraps an error with the 0-based index of the family member that caused it.
    #[error("set {}: {source}", index + 1)]
    InSet {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn in_set(self, index: usize) -> Self {
        Error::InSet {
            index,
            source: Box::new(self),
        }
    }

    /// The innermost error with any `InSet` wrapping removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::InSet { source, .. } => source.root(),
            other => other,
        }
    }

    /// 0-based index of the offending family member, when known.
    pub fn set_index(&self) -> Option<usize> {
        match self {
            Error::InSet { index, .. } => Some(*index),
            _ => None,
        }
    }

    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self.root() {
            Error::CycleTooSmall { .. } => "CycleTooSmall",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::DuplicateVertex { .. } => "DuplicateVertex",
            Error::InvalidArcLength { .. } => "InvalidArcLength",
            Error::EvenCycle { .. } => "EvenCycle",
            Error::WrongSize { .. } => "WrongSize",
            Error::NotIndependent { .. } => "NotIndependent",
            Error::NotAnArc => "NotAnArc",
            Error::WrongCycleOrder { .. } => "WrongCycleOrder",
            Error::ContextMismatch { .. } => "ContextMismatch",
            Error::NoValidK { .. } => "NoValidK",
            Error::NoCaseIndex { .. } => "NoCaseIndex",
            Error::ClaimViolation { .. } => "ClaimViolation",
            Error::AssignmentOutOfArc { .. } => "AssignmentOutOfArc",
            Error::InvalidParameters(_) => "InvalidParameters",
            Error::InSet { .. } => unreachable!("root() strips InSet"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
