use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rejected switch: {0}")]
    RejectedSwitch(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {{{0}, {1}}}")]
    InvalidEdge(usize, usize),

    #[error("{what}: n = {n} exceeds the size limit {cap}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("sequence ({0}) is not graphical")]
    NotGraphical(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("reattachment failed: {0}")]
    Reattach(String),

    #[error("pattern {pattern} does not embed in K_{n}; no threshold exists")]
    NoThreshold { pattern: String, n: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("normalization stuck: {0}")]
    NormalizationStuck(String),

    #[error("sequence ({0}) is above the K4-e threshold but no realization contains K4-e")]
    Counterexample(String),
}
