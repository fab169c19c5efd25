use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0}-{0} is a loop")]
    LoopEdge(Vertex),
    #[error("edge {0}-{1} appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {0}-{1} has non-positive weight")]
    NonPositiveWeight(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} is outside 0..={max}")]
    VertexOutOfRange { vertex: Vertex, max: Vertex },
    #[error("graphs are limited to {0} vertices")]
    TooManyVertices(usize),
    #[error("vertex {0} is not in the given set")]
    VertexNotInU(Vertex),
    #[error("the vertex set must contain the root")]
    RootMissing,
    #[error("blocks do not partition the vertex set")]
    NotAPartition,
    #[error("operation needs an (A, B) bipartition")]
    BipartitionMissing,
    #[error("bipartition sizes {p} + {q} do not match {n} non-root vertices")]
    BadBipartition { p: usize, q: usize, n: usize },
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vector u must be positive and non-decreasing")]
    UNotMonotone,
    #[error("{what} exceeds the limit {limit}")]
    TooLarge { what: &'static str, limit: usize },
    #[error("vector is not a parking function of the graph")]
    NotAParkingFunction,
    #[error("vector is not a maximal parking function of the graph")]
    NotMaximal,
    #[error("target indegrees admit no sink at step {0}")]
    InconsistentIndegrees(usize),
    #[error("orientation is not acyclic with unique source 0")]
    NotInA,
    #[error("orientation does not cover the edges of the graph")]
    OrientationMismatch,
    #[error("weight grid is not monotone")]
    NotMonotone,
    #[error("weight grid has a negative entry")]
    NegativeEntry,
    #[error("shapes disagree: {0}")]
    ShapeMismatch(String),
    #[error("no zero-indegree vertex remains after {0} steps")]
    PeelingStalled(usize),
    #[error("lattice path does not bound the pair")]
    PathDoesNotBound,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("graph matches no invariant family")]
    NotClassified,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::LoopEdge(_) => "LoopEdge",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::NonPositiveWeight(..) => "NonPositiveWeight",
            Error::Disconnected => "Disconnected",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::TooManyVertices(_) => "TooManyVertices",
            Error::VertexNotInU(_) => "VertexNotInU",
            Error::RootMissing => "RootMissing",
            Error::NotAPartition => "NotAPartition",
            Error::BipartitionMissing => "BipartitionMissing",
            Error::BadBipartition { .. } => "BadBipartition",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::UNotMonotone => "UNotMonotone",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotAParkingFunction => "NotAParkingFunction",
            Error::NotMaximal => "NotMaximal",
            Error::InconsistentIndegrees(_) => "InconsistentIndegrees",
            Error::NotInA => "NotInA",
            Error::OrientationMismatch => "OrientationMismatch",
            Error::NotMonotone => "NotMonotone",
            Error::NegativeEntry => "NegativeEntry",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::PeelingStalled(_) => "PeelingStalled",
            Error::PathDoesNotBound => "PathDoesNotBound",
            Error::InvalidParameters(_) => "InvalidParameters",
            Error::NotClassified => "NotClassified",
            Error::Parse { .. } => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size guards for exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest n for the literal subset scan.
    pub max_subset_n: usize,
    /// Largest set any enumeration may materialize.
    pub max_set: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_subset_n: 24, max_set: 10_000_000 }
    }
}
