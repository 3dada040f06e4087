use crate::MoveError;
use gem_core::{g_count, residues, BoundaryGem, Color, Gem, Vertex};
use serde::{Deserialize, Serialize};

/// Quadricolor `P0..P3` plus the pair `P4 = nbr1(P3)`, `P5 = nbr1(P0)` used
/// by the triad exchange.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadricolorSite {
    pub p: [Vertex; 6],
    pub component: usize,
}

impl QuadricolorSite {
    pub fn quad(&self) -> [Vertex; 4] {
        [self.p[0], self.p[1], self.p[2], self.p[3]]
    }
}

/// Structural test on four vertices of a gem with at least four colors:
/// `P_s - P_{s+1}` has color `s`, and `P_s` is off the `{s+1, s+2}`-cycle
/// through the other three.
pub fn is_quadricolor(g: &Gem, p: [Vertex; 4]) -> bool {
    if p.iter().any(|&v| !g.is_alive(v)) {
        return false;
    }
    for s in 0..4 {
        for t in s + 1..4 {
            if p[s] == p[t] {
                return false;
            }
        }
        if !g.has_edge(p[s], p[(s + 1) % 4], s as Color) {
            return false;
        }
    }
    for s in 0..4 {
        let part = residues(g, &[((s + 1) % 4) as Color, ((s + 2) % 4) as Color]);
        let o = [p[(s + 1) % 4], p[(s + 2) % 4], p[(s + 3) % 4]];
        if !(part.same(o[0], o[1]) && part.same(o[1], o[2])) || part.same(p[s], o[0]) {
            return false;
        }
    }
    true
}

/// Completes a quadricolor to a six-vertex site.
pub fn site_from_quad(g: &Gem, p: [Vertex; 4], component: usize) -> QuadricolorSite {
    let p4 = g.nbr(p[3], 1);
    let p5 = g.nbr(p[0], 1);
    QuadricolorSite {
        p: [p[0], p[1], p[2], p[3], p4, p5],
        component,
    }
}

/// Every quadricolor of `g`, indexed by its `P0`.
pub fn find_quadricolors(g: &Gem) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let p1 = g.nbr(v, 0);
        let p2 = g.nbr(p1, 1);
        let p3 = g.nbr(p2, 2);
        let q = [v, p1, p2, p3];
        if g.neighbor(p3, 3) == Some(v) && is_quadricolor(g, q) {
            out.push(q);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriadDirection {
    /// `{P1P2, P3P4, P5P0}` becomes `{P0P1, P2P3, P4P5}`.
    AttachHandle,
    /// The inverse rewiring.
    Smooth,
}

impl std::str::FromStr for TriadDirection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "attach" | "attach_handle" => Ok(TriadDirection::AttachHandle),
            "smooth" => Ok(TriadDirection::Smooth),
            _ => Err(format!("unknown direction `{s}`")),
        }
    }
}

impl std::fmt::Display for TriadDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TriadDirection::AttachHandle => "attach",
            TriadDirection::Smooth => "smooth",
        })
    }
}

/// The color of the exchanged triad: 4 in a 5-colored gem, 1 otherwise.
pub fn triad_color(g: &Gem) -> Color {
    if g.colors() == 5 {
        4
    } else {
        1
    }
}

/// Exchanges the triad of `triad_color` edges at the site.
pub fn triad_exchange(
    g: &Gem,
    q: &QuadricolorSite,
    direction: TriadDirection,
) -> Result<Gem, MoveError> {
    let c = triad_color(g);
    let p = q.p;
    if p.iter().any(|&v| !g.is_alive(v)) {
        return Err(MoveError::SiteStale("site vertex no longer exists".into()));
    }
    let smooth_pairs = [(p[1], p[2]), (p[3], p[4]), (p[5], p[0])];
    let attach_pairs = [(p[0], p[1]), (p[2], p[3]), (p[4], p[5])];
    let (from, to) = match direction {
        TriadDirection::AttachHandle => (smooth_pairs, attach_pairs),
        TriadDirection::Smooth => (attach_pairs, smooth_pairs),
    };
    if from.iter().any(|&(u, v)| !g.has_edge(u, v, c)) {
        return Err(MoveError::SiteStale(format!(
            "expected {direction} triad of color {c} is not present"
        )));
    }
    let mut h = g.clone();
    for &(u, _) in &from {
        h.disconnect(u, c);
    }
    for &(u, v) in &to {
        h.connect(u, v, c)?;
    }
    if cfg!(debug_assertions) && c == 4 && direction == TriadDirection::AttachHandle {
        for i in 0..5 {
            for j in i + 1..5 {
                let before = g_count(g, &[i, j]) as i64;
                let after = g_count(&h, &[i, j]) as i64;
                let want = if (i, j) == (1, 4) { -2 } else { 0 };
                assert_eq!(after - before, want, "cycle count change for colors {i},{j}");
            }
        }
    }
    Ok(h)
}

/// Deletes the four quadricolor vertices and welds the hanging edges.
pub fn smooth_quadricolor(g: &Gem, q: [Vertex; 4]) -> Result<Gem, MoveError> {
    if !is_quadricolor(g, q) {
        return Err(MoveError::SiteStale(format!("{q:?} is not a quadricolor")));
    }
    let mut h = g.clone();
    let mut welds = Vec::new();
    for c in 0..g.colors() as Color {
        let hang: Vec<Vertex> = q
            .iter()
            .filter_map(|&v| g.neighbor(v, c))
            .filter(|w| !q.contains(w))
            .collect();
        match hang.as_slice() {
            [] => {}
            [a, b] if a != b => welds.push((*a, *b, c)),
            [a, _] => return Err(MoveError::WeldClash { vertex: *a, color: c }),
            _ => {
                return Err(MoveError::SiteStale(format!(
                    "color {c} has {} hanging edges",
                    hang.len()
                )))
            }
        }
    }
    for &v in &q {
        h.remove_vertex(v)?;
    }
    for (a, b, c) in welds {
        h.connect(a, b, c)?;
    }
    Ok(h)
}

/// Joins boundary vertices that end the same `{c, top}`-path by a top-colored
/// edge.
pub fn cap_off(b: &BoundaryGem, c: Color) -> Result<Gem, MoveError> {
    let mut g = b.gem().clone();
    let top = (g.colors() - 1) as Color;
    let missing = b.boundary_vertices();
    let mut done = std::collections::HashSet::new();
    for &v in &missing {
        if done.contains(&v) {
            continue;
        }
        let w = path_end(&g, v, c, top)?;
        g.connect(v, w, top)?;
        done.insert(v);
        done.insert(w);
    }
    Ok(g)
}

/// Follows the `{c, top}`-path that starts at `v` with color `c`.
pub(crate) fn path_end(g: &Gem, v: Vertex, c: Color, top: Color) -> Result<Vertex, MoveError> {
    let mut w = g.nbr(v, c);
    let mut steps = 0usize;
    while let Some(x) = g.neighbor(w, top) {
        w = g.nbr(x, c);
        steps += 1;
        if steps > g.slot_count() {
            break;
        }
    }
    if w == v || g.neighbor(w, top).is_some() {
        return Err(MoveError::OddPath { vertex: v, color: c, top });
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_off_forced_edge() {
        let mut g = Gem::with_order(3, 2).unwrap();
        g.connect(0, 1, 0).unwrap();
        g.connect(0, 1, 1).unwrap();
        let b = BoundaryGem::new(g).unwrap();
        assert_eq!(b.boundary_vertices(), vec![0, 1]);
        let h = cap_off(&b, 0).unwrap();
        assert!(h.has_edge(0, 1, 2));
    }

    #[test]
    fn cap_off_no_boundary() {
        let mut g = Gem::with_order(3, 2).unwrap();
        for c in 0..3 {
            g.connect(0, 1, c).unwrap();
        }
        let b = BoundaryGem::new(g.clone()).unwrap();
        assert_eq!(cap_off(&b, 1).unwrap(), g);
    }
}
