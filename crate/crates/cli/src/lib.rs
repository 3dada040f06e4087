//! Plumbing behind the `kgem` binary: exit codes, atomic writes and the
//! triangulation exports.

mod export;

pub use export::{dot_text, gluings, gluings_text, parse_gluings, GluingError};

use builder::BuildError;
use diagram::DiagramError;
use std::io::Write;
use std::path::Path;

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PLANNING: i32 = 3;
pub const EXIT_POSTCONDITION: i32 = 4;

/// Exit code for a failed build.
pub fn build_exit_code(e: &BuildError) -> i32 {
    match e {
        BuildError::Diagram(d) => match d {
            DiagramError::NotSeparable(_)
            | DiagramError::DottedWithoutUndercrossing(_)
            | DiagramError::DottedWrithe { .. }
            | DiagramError::BadPin(_)
            | DiagramError::NoPlanFound(_) => EXIT_PLANNING,
            _ => EXIT_VALIDATION,
        },
        BuildError::NoQuadricolor(_) | BuildError::PlanStale(_) => EXIT_PLANNING,
        BuildError::SitesSyntax { .. } => EXIT_VALIDATION,
        BuildError::PastingMismatch(_)
        | BuildError::DoubleAssignment(..)
        | BuildError::Postcondition(_)
        | BuildError::Move(_)
        | BuildError::Gem(_) => EXIT_POSTCONDITION,
    }
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
