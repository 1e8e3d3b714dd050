use thiserror::Error;

use crate::poly::DomPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("edge {{{u}, {v}}} is not present in the graph")]
    MissingEdge { u: usize, v: usize },

    #[error("graph has {vertices} vertices, above the enumeration cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },

    #[error("exact division left remainder {remainder}")]
    InexactDivision { remainder: DomPoly },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("recurrence system inconsistent at {identity}: {detail}")]
    Inconsistent { identity: String, detail: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}
