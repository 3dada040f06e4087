//! Moves on gems: dipoles, rho-pairs, capping-off, quadricolor triad
//! exchange and smoothing, and a greedy dipole-elimination engine.

mod dipole;
mod error;
mod log;
mod quad;
mod reduce;
mod rho;

pub use dipole::{
    add_dipole, dipole_site_of, eliminate_dipole, find_dipoles, is_dipole, is_proper_dipole,
    is_proper_dipole_with, DipoleCheck, DipoleHandle, DipoleSite, Properness,
};
pub use error::MoveError;
pub use log::{Move, MoveLog, MoveRecord};
pub use quad::{
    cap_off, find_quadricolors, is_quadricolor, site_from_quad, smooth_quadricolor, triad_color,
    triad_exchange, QuadricolorSite, TriadDirection,
};
pub use reduce::{
    greedy_reduce, greedy_reduce_with, merge_2hat_residues, residues_are_spheres, sweep_dipoles,
    Budget, ReduceOptions, Verdict,
};
pub use rho::{find_rho_pairs, rho2_genus_delta, switch_rho2_factorized, switch_rho_pair, RhoPairHandle};
