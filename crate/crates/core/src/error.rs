use thiserror::Error;

use crate::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad dimension {d}: {reason}")]
    BadDimension { d: usize, reason: &'static str },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid incidence data: {0}")]
    InvalidIncidence(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("not polytopal: {0}")]
    NotPolytopal(String),

    #[error("rank {k} out of range 0..={max}")]
    RankOutOfRange { k: usize, max: usize },

    #[error("skeleton ranks differ ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("vertex {vertex} has degree {degree} < {d}")]
    DegreeTooLow { vertex: usize, degree: usize, d: usize },

    #[error("invalid pyramid base: {0}")]
    InvalidBase(String),

    #[error("bad fixture index {0}")]
    BadIndex(usize),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("unrecognized structure: {0}")]
    Unrecognized(String),

    #[error("basic excess lemma violated by facets {facet_a} and {facet_b}: {detail}")]
    LemmaViolated {
        facet_a: usize,
        facet_b: usize,
        detail: String,
    },

    #[error("excess {xi} is at least d = {d}")]
    ExcessTooLarge { xi: usize, d: usize },

    #[error("inconsistent orientation constraints: {0}")]
    InconsistentConstraints(String),

    #[error("orientation graph does not match the lattice graph")]
    GraphMismatch,

    #[error("vertex set {0} does not span a complete subgraph")]
    RNotClique(VertexSet),

    #[error("graph is not {d}-connected")]
    NotBalinski { d: usize },

    #[error("graph is not simple of degree {d}: {detail}")]
    NotSimple { d: usize, detail: String },

    #[error("nonsimple core not recognized: {0}")]
    CoreUnrecognized(String),

    #[error("no feasible completion of frame rooted at {root}")]
    NoCompletion { root: usize },

    #[error("ambiguous completion of frame rooted at {root}: {candidates:?}")]
    AmbiguousCompletion {
        root: usize,
        candidates: Vec<VertexSet>,
    },

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("internal validation failed: {0}")]
    InternalValidationFailed(String),

    #[error("search budget exceeded: {needed} states needed, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}
