//! Gem construction: the 4-colored graph Λ of a framed link, and the
//! 5-colored graphs of framed links and of Kirby diagrams.

mod error;
mod gamma;
mod lambda;
mod pipeline;

pub use error::BuildError;
pub use gamma::{build_gamma_framed, build_gamma_kirby, GammaLog};
pub use lambda::{build_lambda, crossing_vertex, Lambda};
pub use pipeline::{build, build_with_plan, parse_sites, sites_text, Build, BuildOptions};
