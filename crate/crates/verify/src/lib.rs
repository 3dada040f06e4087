//! Checks that a gem satisfies the manifold conditions, residue by residue.

use gem_core::{
    euler_characteristic, extract_residue_gem, g_count, surface_residues, Color, Gem, Vertex,
};
use moves::{greedy_reduce_with, Budget, ReduceOptions, Verdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidueStatus {
    /// Reduced to order two.
    SphereCertified,
    /// Surfaces fine but the reduction stopped early.
    Unknown,
    /// Some 3-residue is not a sphere.
    NotManifold,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCheck {
    pub color: Color,
    /// Smallest vertex id of the residue in the input gem.
    pub representative: Vertex,
    pub order: usize,
    pub reduced_order: usize,
    pub surfaces_ok: bool,
    pub status: ResidueStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub colors: usize,
    pub order: usize,
    pub budget_steps: usize,
    pub seed: Option<u64>,
    /// Every 3-residue has characteristic 2.
    pub surfaces_ok: bool,
    pub residues: Vec<ResidueCheck>,
    /// Colors with a residue that is not sphere certified.
    pub singular_colors: Vec<Color>,
}

impl CheckReport {
    /// Manifold condition with only `allowed` colors possibly singular.
    pub fn passes(&self, allowed: &[Color]) -> bool {
        self.surfaces_ok && self.singular_colors.iter().all(|c| allowed.contains(c))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Checks every ĉ-residue with the default reduction budget.
pub fn manifold_check(g: &Gem) -> CheckReport {
    manifold_check_with(
        g,
        &ReduceOptions {
            budget: Budget::steps(100_000),
            ..ReduceOptions::default()
        },
    )
}

pub fn manifold_check_with(g: &Gem, opts: &ReduceOptions) -> CheckReport {
    let surfaces_ok = surface_residues(g).iter().all(|s| s.chi == 2);
    let jobs: Vec<(Color, gem_core::ResidueGem)> = (0..g.colors() as Color)
        .flat_map(|c| extract_residue_gem(g, c).into_iter().map(move |r| (c, r)))
        .collect();
    let residues: Vec<ResidueCheck> = jobs
        .par_iter()
        .map(|(c, r)| check_residue(*c, r, opts))
        .collect();
    let mut singular_colors: Vec<Color> = residues
        .iter()
        .filter(|r| r.status != ResidueStatus::SphereCertified)
        .map(|r| r.color)
        .collect();
    singular_colors.dedup();
    CheckReport {
        colors: g.colors(),
        order: g.order(),
        budget_steps: opts.budget.max_steps,
        seed: opts.seed,
        surfaces_ok,
        residues,
        singular_colors,
    }
}

fn check_residue(c: Color, r: &gem_core::ResidueGem, opts: &ReduceOptions) -> ResidueCheck {
    let h = &r.gem;
    let surfaces_ok = h.colors() < 3 || surface_residues(h).iter().all(|s| s.chi == 2);
    let (status, reduced_order) = if !surfaces_ok {
        (ResidueStatus::NotManifold, h.order())
    } else {
        let (red, _, v) = greedy_reduce_with(h, opts);
        let st = match v {
            Verdict::SphereCertified => ResidueStatus::SphereCertified,
            Verdict::Reduced => ResidueStatus::Unknown,
        };
        (st, red.order())
    };
    ResidueCheck {
        color: c,
        representative: *r.vertices.iter().min().expect("nonempty residue"),
        order: h.order(),
        reduced_order,
        surfaces_ok,
        status,
    }
}

/// True iff deleting color 4 from `g` gives exactly `lam` and no other color
/// is singular.
pub fn boundary_check(g: &Gem, lam: &Gem) -> bool {
    if g.colors() != lam.colors() + 1 || g.order() != lam.order() {
        return false;
    }
    let keep: Vec<Color> = (0..lam.colors() as Color).collect();
    match g.restrict_colors(&keep) {
        Ok(h) if h == *lam => {}
        _ => return false,
    }
    let top = lam.colors() as Color;
    manifold_check(g).passes(&[top])
}

/// Characteristic of every 3-residue computed from the genus formula and
/// from the alternating residue count; true when all pairs agree.
pub fn surface_chi_agrees(g: &Gem) -> bool {
    let n = g.colors() as Color;
    let mut ok = true;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for r in extract_three(g, [a, b, c]) {
                    let p = (r.order() / 2) as i64;
                    let faces = (g_count(&r, &[0, 1]) + g_count(&r, &[0, 2]) + g_count(&r, &[1, 2]))
                        as i64;
                    ok &= faces - p == euler_characteristic(&r);
                }
            }
        }
    }
    ok
}

fn extract_three(g: &Gem, cs: [Color; 3]) -> Vec<Gem> {
    let part = gem_core::residues(g, &cs);
    part.blocks()
        .iter()
        .map(|vs| gem_core::residue_containing(g, vs[0], &cs).gem)
        .collect()
}
