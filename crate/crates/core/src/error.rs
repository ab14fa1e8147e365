use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("uniformity {r} is invalid for {n} vertices")]
    BadUniformity { n: usize, r: usize },
    #[error("{n} vertices exceeds the supported maximum of 64")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {index} has {size} distinct vertices, expected {r}")]
    NonUniformEdge { index: usize, size: usize, r: usize },
    #[error("edge {index} duplicates edge {first}")]
    DuplicateEdge { index: usize, first: usize },
    #[error("edge id {id} is out of range ({m} edges)")]
    EdgeOutOfRange { id: usize, m: usize },
    #[error("co-degree needs two distinct vertices, got {vertex} twice")]
    SameVertex { vertex: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("length {length} is outside [{lo}, {hi}]")]
    LengthOutOfRange { length: usize, lo: usize, hi: usize },
    #[error("index {value} is outside 0..{n}")]
    OutOfRange { value: usize, n: usize },
    #[error("not a chord: {0}")]
    NotAChord(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not a self-shift-complementary set: {0}")]
    NotSsc(String),
    #[error("self-shift-complementary structure broken: {0}")]
    SscInvariant(String),
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("no constructive branch produced a {length}-cycle")]
    ExtractionFailed { length: usize },
    #[error("matching failed: {0}")]
    MatchingFailed(String),
    #[error("invalid compatible graph: {0}")]
    InvalidCompatGraph(String),
    #[error("not a cycle of the graph: {0}")]
    NotACycle(String),
    #[error("invalid Berge cycle: {0}")]
    InvalidCycle(String),
    #[error("bad construction parameters: {0}")]
    BadParameters(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
