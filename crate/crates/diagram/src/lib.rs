//! Kirby diagrams given by PD codes: parsing, faces, curls and markers.

mod curls;
mod error;
mod faces;
mod kd;
mod markers;

pub use curls::{curl_placements, curl_signs, plan_curls, plan_curls_at, AugmentedDiagram, Site};
pub use error::DiagramError;
pub use faces::{faces_and_chessboard, Chess, Face, FaceMap};
pub use kd::{
    parse_kirby, ArcEnds, Component, ComponentKind, End, KirbyDiagram, Piece, Pins, Side,
};
pub use markers::{
    end_piece, marker_plans, plan_markers, split_dotted, traverse, y_by_component, y_sequence,
    DottedMarker, DottedSplit, FramedMarker, MarkerPlan, Step,
};

pub type Arc = u32;
