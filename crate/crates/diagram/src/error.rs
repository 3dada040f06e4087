use crate::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("arc {arc} appears {count} times among crossings (expected 2)")]
    ArcArity { arc: Arc, count: usize },
    #[error("arc {0} is not listed in any component")]
    UnknownArc(Arc),
    #[error("component {component}: {msg}")]
    Orientation { component: usize, msg: String },
    #[error("face count {faces} does not match s + 2 = {expected}")]
    NonPlanarFaces { faces: usize, expected: usize },
    #[error("diagram shadow is disconnected; add a clasp or kink to join the pieces")]
    Disconnected,
    #[error("missing or invalid `outer` record")]
    MissingOuterFace,
    #[error("dotted component {0} is listed after a framed one")]
    DotAfterFrame(usize),
    #[error("faces cannot be chessboard colored")]
    ColoringClash,
    #[error("dotted component {0} cannot be split into an overcrossing part and an undercrossing part")]
    NotSeparable(usize),
    #[error("dotted component {0} has no undercrossing")]
    DottedWithoutUndercrossing(usize),
    #[error("dotted component {component} has writhe {writhe}; only writhe 0 is supported")]
    DottedWrithe { component: usize, writhe: i64 },
    #[error("bad pin: {0}")]
    BadPin(String),
    #[error("no marker plan found: {0}")]
    NoPlanFound(String),
}
