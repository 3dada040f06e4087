//! Regular edge-colored graphs (gems) and the combinatorics shared by every
//! other crate in the workspace.

mod error;
mod gem;
mod genus;
mod io;
mod iso;
mod perm;
mod residue;

pub use error::{GemError, GenusError, ParseGemError};
pub use gem::{validate_edge_list, validate_gem, BoundaryGem, Defect, Gem, ValidationReport};
pub use genus::{euler_characteristic, genus_min, genus_wrt, surface_residues, SurfaceResidue};
pub use io::{parse_gem_text, to_gem_text};
pub use iso::color_isomorphic;
pub use perm::{all_cyclic_permutations, CyclicPermutation};
pub use residue::{extract_residue_gem, g_count, residue_containing, residues, ResidueGem, ResiduePartition};

/// Vertex identifier. Ids are slot indices and are never reused inside a gem.
pub type Vertex = u32;
/// Edge color, `0..colors`.
pub type Color = u8;

/// Largest supported color count (dimension 5).
pub const MAX_COLORS: usize = 6;
