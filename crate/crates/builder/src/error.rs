use diagram::DiagramError;
use gem_core::{GemError, Vertex};
use moves::MoveError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("pasting left vertex {0} without all four colors")]
    PastingMismatch(Vertex),
    #[error("no quadricolor found for {0}")]
    NoQuadricolor(String),
    #[error("vertex {0} or {1} already has a 4-colored edge")]
    DoubleAssignment(Vertex, Vertex),
    #[error("marker plan does not match the diagram: {0}")]
    PlanStale(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Gem(#[from] GemError),
    #[error("bad sites file, line {line}: {msg}")]
    SitesSyntax { line: usize, msg: String },
}
