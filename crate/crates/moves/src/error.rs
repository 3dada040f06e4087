use gem_core::{Color, GemError, Vertex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("welding color {color} would create a loop at vertex {vertex}")]
    WeldClash { vertex: Vertex, color: Color },
    #[error("vertices {0} and {1} do not form a dipole")]
    NotADipole(Vertex, Vertex),
    #[error("rho-pair reconnection is not determined: {0}")]
    AmbiguousReconnection(String),
    #[error("the {{{c},{top}}}-path from vertex {vertex} does not end at a boundary vertex", c = .color, top = .top)]
    OddPath {
        vertex: Vertex,
        color: Color,
        top: Color,
    },
    #[error("quadricolor site is stale: {0}")]
    SiteStale(String),
    #[error("no dipole found: {0}")]
    NoDipoleFound(String),
    #[error("bad move log line {line}: {msg}")]
    BadLog { line: usize, msg: String },
    #[error(transparent)]
    Gem(#[from] GemError),
}
