use crate::reduce::{greedy_reduce, Budget, Verdict};
use crate::MoveError;
use gem_core::{euler_characteristic, residue_containing, residues, Color, Gem, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Two vertices joined by exactly the edges of `colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DipoleHandle {
    pub x: Vertex,
    pub y: Vertex,
    pub colors: Vec<Color>,
}

impl DipoleHandle {
    pub fn r(&self) -> usize {
        self.colors.len()
    }
}

/// Where a new dipole goes: for every color outside `colors`, the listed
/// vertex `a` loses its edge `a-b` of that color; the new vertex `x` takes
/// `a` and the new vertex `y` takes `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DipoleSite {
    pub colors: Vec<Color>,
    pub breaks: Vec<(Color, Vertex)>,
}

impl DipoleSite {
    /// Every non-dipole edge is broken at the same vertex.
    pub fn at_vertex(g: &Gem, a: Vertex, colors: &[Color]) -> Self {
        let mut colors = colors.to_vec();
        colors.sort_unstable();
        let breaks = (0..g.colors() as Color)
            .filter(|c| !colors.contains(c))
            .map(|c| (c, a))
            .collect();
        DipoleSite { colors, breaks }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Properness {
    Proper,
    Improper,
    Unknown,
}

/// How much to trust the ambient gem when judging dipoles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DipoleCheck {
    /// Examine the complementary residues.
    Exact,
    /// The gem is known to represent a compact manifold: every r-dipole with
    /// r > 1 is proper, and so are 1-dipoles when the boundary is empty or
    /// connected.
    Manifold { connected_boundary: bool },
}

fn complement(g: &Gem, colors: &[Color]) -> Vec<Color> {
    (0..g.colors() as Color).filter(|c| !colors.contains(c)).collect()
}

/// All r-dipoles, ordered by smaller vertex id.
pub fn find_dipoles(g: &Gem, r: usize) -> Vec<DipoleHandle> {
    let mut cache: HashMap<Vec<Color>, gem_core::ResiduePartition> = HashMap::new();
    let mut out = Vec::new();
    for x in g.vertices() {
        for c in 0..g.colors() as Color {
            let Some(y) = g.neighbor(x, c) else { continue };
            if y <= x {
                continue;
            }
            let cols = g.colors_between(x, y);
            if cols[0] != c || cols.len() != r || r >= g.colors() {
                continue;
            }
            let comp = complement(g, &cols);
            let part = cache
                .entry(comp.clone())
                .or_insert_with(|| residues(g, &comp));
            if !part.same(x, y) {
                out.push(DipoleHandle { x, y, colors: cols });
            }
        }
    }
    out
}

/// Checks that `d` still describes a dipole of `g`.
pub fn is_dipole(g: &Gem, d: &DipoleHandle) -> bool {
    if !g.is_alive(d.x) || !g.is_alive(d.y) {
        return false;
    }
    let mut cols = g.colors_between(d.x, d.y);
    cols.sort_unstable();
    let mut want = d.colors.clone();
    want.sort_unstable();
    if cols != want || cols.is_empty() || cols.len() >= g.colors() {
        return false;
    }
    !residues(g, &complement(g, &cols)).same(d.x, d.y)
}

/// Whether eliminating `d` keeps the represented polyhedron: one of the two
/// complementary residues at the dipole must be a sphere.
pub fn is_proper_dipole(g: &Gem, d: &DipoleHandle) -> Properness {
    is_proper_dipole_with(g, d, DipoleCheck::Exact)
}

pub fn is_proper_dipole_with(g: &Gem, d: &DipoleHandle, check: DipoleCheck) -> Properness {
    if let DipoleCheck::Manifold { connected_boundary } = check {
        if d.r() > 1 || connected_boundary {
            return Properness::Proper;
        }
    }
    let comp = complement(g, &d.colors);
    let verdicts = [d.x, d.y].map(|v| residue_sphere(g, v, &comp));
    if verdicts.contains(&Properness::Proper) {
        Properness::Proper
    } else if verdicts.iter().all(|&p| p == Properness::Improper) {
        Properness::Improper
    } else {
        Properness::Unknown
    }
}

/// Is the `colors`-residue at `v` a sphere of dimension `colors.len()-1`?
fn residue_sphere(g: &Gem, v: Vertex, colors: &[Color]) -> Properness {
    match colors.len() {
        0..=2 => Properness::Proper,
        3 => {
            let r = residue_containing(g, v, colors);
            if euler_characteristic(&r.gem) == 2 {
                Properness::Proper
            } else {
                Properness::Improper
            }
        }
        _ => {
            let r = residue_containing(g, v, colors);
            sphere_verdict(&r.gem)
        }
    }
}

/// Sphere recognition for a connected gem with at least four colors: a
/// non-sphere face residue refutes, reduction to order two certifies.
pub(crate) fn sphere_verdict(h: &Gem) -> Properness {
    if !crate::reduce::residues_are_spheres(h) {
        return Properness::Improper;
    }
    let (_, _, verdict) = greedy_reduce(h, &Budget::steps(10_000), None);
    match verdict {
        Verdict::SphereCertified => Properness::Proper,
        Verdict::Reduced => Properness::Unknown,
    }
}

/// Removes the dipole and welds the hanging edges color by color.
pub fn eliminate_dipole(g: &Gem, d: &DipoleHandle) -> Result<Gem, MoveError> {
    let mut h = g.clone();
    eliminate_in_place(&mut h, d)?;
    Ok(h)
}

pub(crate) fn eliminate_in_place(h: &mut Gem, d: &DipoleHandle) -> Result<(), MoveError> {
    let (x, y) = (d.x, d.y);
    if !h.is_alive(x) || !h.is_alive(y) {
        return Err(MoveError::NotADipole(x, y));
    }
    let mut cols = h.colors_between(x, y);
    cols.sort_unstable();
    let mut want = d.colors.clone();
    want.sort_unstable();
    if cols != want {
        return Err(MoveError::NotADipole(x, y));
    }
    let mut welds = Vec::new();
    for c in complement(h, &cols) {
        let (a, b) = (h.neighbor(x, c), h.neighbor(y, c));
        match (a, b) {
            (Some(a), Some(b)) if a == b => {
                return Err(MoveError::WeldClash { vertex: a, color: c })
            }
            (Some(a), Some(b)) => welds.push((a, b, c)),
            (None, None) => {}
            (Some(a), None) | (None, Some(a)) => welds.push((a, Vertex::MAX, c)),
        }
    }
    h.remove_vertex(x)?;
    h.remove_vertex(y)?;
    for (a, b, c) in welds {
        if b != Vertex::MAX {
            h.connect(a, b, c)?;
        }
    }
    Ok(())
}

/// Inserts a dipole at `site`; returns the new gem and the handle of the
/// inserted pair.
pub fn add_dipole(g: &Gem, site: &DipoleSite) -> Result<(Gem, DipoleHandle), MoveError> {
    let mut h = g.clone();
    let d = add_in_place(&mut h, site)?;
    Ok((h, d))
}

pub(crate) fn add_in_place(h: &mut Gem, site: &DipoleSite) -> Result<DipoleHandle, MoveError> {
    let comp = complement(h, &site.colors);
    let mut broken = Vec::with_capacity(comp.len());
    for &c in &comp {
        let &(_, a) = site
            .breaks
            .iter()
            .find(|(k, _)| *k == c)
            .ok_or_else(|| MoveError::NoDipoleFound(format!("site lacks color {c}")))?;
        let b = h
            .neighbor(a, c)
            .ok_or(gem_core::GemError::MissingColor { vertex: a, color: c })?;
        broken.push((c, a, b));
    }
    let class_a = broken.first().map(|&(_, a, _)| h.class(a)).unwrap_or(0);
    if broken.iter().any(|&(_, a, _)| h.class(a) != class_a) {
        return Err(MoveError::AmbiguousReconnection(
            "dipole site mixes bipartition classes".into(),
        ));
    }
    let x = h.add_vertex(1 - class_a);
    let y = h.add_vertex(class_a);
    for &(c, a, _) in &broken {
        h.disconnect(a, c);
    }
    for &(c, a, b) in &broken {
        h.connect(x, a, c)?;
        h.connect(y, b, c)?;
    }
    for &c in &site.colors {
        h.connect(x, y, c)?;
    }
    let mut colors = site.colors.clone();
    colors.sort_unstable();
    Ok(DipoleHandle { x, y, colors })
}

/// The site that re-inserts `d` after it has been eliminated.
pub fn dipole_site_of(g: &Gem, d: &DipoleHandle) -> DipoleSite {
    let breaks = complement(g, &d.colors)
        .into_iter()
        .map(|c| (c, g.nbr(d.x, c)))
        .collect();
    let mut colors = d.colors.clone();
    colors.sort_unstable();
    DipoleSite { colors, breaks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_two(colors: usize) -> Gem {
        let mut g = Gem::with_order(colors, 2).unwrap();
        for c in 0..colors as Color {
            g.connect(0, 1, c).unwrap();
        }
        g
    }

    #[test]
    fn order_two_has_no_dipoles() {
        let g = order_two(5);
        for r in 1..5 {
            assert!(find_dipoles(&g, r).is_empty());
        }
    }

    #[test]
    fn add_then_eliminate() {
        let g = order_two(5);
        let (h, d) = add_dipole(&g, &DipoleSite::at_vertex(&g, 0, &[1, 3])).unwrap();
        assert_eq!(h.order(), 4);
        assert!(is_dipole(&h, &d));
        assert_eq!(is_proper_dipole(&h, &d), Properness::Proper);
        let back = eliminate_dipole(&h, &d).unwrap();
        assert!(gem_core::color_isomorphic(&back, &g).is_some());
    }
}
