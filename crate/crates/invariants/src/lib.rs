//! Upper bounds for regular genus and gem-complexity read off a Kirby
//! diagram, checked against witnesses computed from the built gem.

mod bounds;
mod report;

pub use bounds::{bounds_framed, bounds_kirby, dotted_reduction, report_for, WitnessOptions};
pub use report::{Bounds, Case, Check, InvariantError, InvariantReport, Witnesses};
