use crate::{Color, Vertex};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GemError {
    #[error("color {color} out of range for a {colors}-colored graph")]
    ColorOutOfRange { color: Color, colors: u8 },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(Vertex),
    #[error("vertex {vertex} already has an edge of color {color}")]
    ColorOccupied { vertex: Vertex, color: Color },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex {vertex} is missing color {color}")]
    MissingColor { vertex: Vertex, color: Color },
    #[error("unsupported color count {0}")]
    BadColorCount(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenusError {
    #[error("graph is not bipartite")]
    NonBipartite,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not regular")]
    NotRegular,
    #[error("permutation does not match the color count")]
    PermutationMismatch,
    #[error("genus formula gave an inconsistent value ({0})")]
    Inconsistent(i64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseGemError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `gem` header")]
    MissingHeader,
    #[error("invalid graph: {0}")]
    Invalid(String),
}
