use crate::{Color, GemError, Vertex, MAX_COLORS};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

const NIL: Vertex = Vertex::MAX;

/// A properly edge-colored multigraph with at most one edge of each color per
/// vertex. Vertices carry an explicit bipartition class.
///
/// Deleted vertices leave a dead slot behind so that ids stay stable across
/// moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gem {
    colors: u8,
    adj: Vec<[Vertex; MAX_COLORS]>,
    class: Vec<u8>,
    alive: Vec<bool>,
    live: usize,
}

impl Gem {
    pub fn new(colors: usize) -> Result<Self, GemError> {
        if !(2..=MAX_COLORS).contains(&colors) {
            return Err(GemError::BadColorCount(colors));
        }
        Ok(Gem {
            colors: colors as u8,
            adj: Vec::new(),
            class: Vec::new(),
            alive: Vec::new(),
            live: 0,
        })
    }

    /// Vertices `0..order`, class given by parity.
    pub fn with_order(colors: usize, order: usize) -> Result<Self, GemError> {
        let mut g = Gem::new(colors)?;
        for v in 0..order {
            g.add_vertex((v % 2) as u8);
        }
        Ok(g)
    }

    pub fn colors(&self) -> usize {
        self.colors as usize
    }

    /// n, for a gem with n+1 colors.
    pub fn dimension(&self) -> usize {
        self.colors as usize - 1
    }

    pub fn order(&self) -> usize {
        self.live
    }

    pub fn slot_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_alive(&self, v: Vertex) -> bool {
        self.alive.get(v as usize).copied().unwrap_or(false)
    }

    pub fn class(&self, v: Vertex) -> u8 {
        self.class[v as usize]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.adj.len() as Vertex).filter(move |&v| self.alive[v as usize])
    }

    pub fn add_vertex(&mut self, class: u8) -> Vertex {
        let id = self.adj.len() as Vertex;
        self.adj.push([NIL; MAX_COLORS]);
        self.class.push(class & 1);
        self.alive.push(true);
        self.live += 1;
        id
    }

    /// Detaches every edge at `v` and kills the slot.
    pub fn remove_vertex(&mut self, v: Vertex) -> Result<(), GemError> {
        self.check_vertex(v)?;
        for c in 0..self.colors {
            self.disconnect(v, c);
        }
        self.alive[v as usize] = false;
        self.live -= 1;
        Ok(())
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GemError> {
        if self.is_alive(v) {
            Ok(())
        } else {
            Err(GemError::NoSuchVertex(v))
        }
    }

    fn check_color(&self, c: Color) -> Result<(), GemError> {
        if c < self.colors {
            Ok(())
        } else {
            Err(GemError::ColorOutOfRange {
                color: c,
                colors: self.colors,
            })
        }
    }

    pub fn connect(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<(), GemError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_color(c)?;
        if u == v {
            return Err(GemError::Loop(u));
        }
        for w in [u, v] {
            if self.adj[w as usize][c as usize] != NIL {
                return Err(GemError::ColorOccupied {
                    vertex: w,
                    color: c,
                });
            }
        }
        self.adj[u as usize][c as usize] = v;
        self.adj[v as usize][c as usize] = u;
        Ok(())
    }

    /// Removes the c-colored edge at `u`, returning the former neighbour.
    pub fn disconnect(&mut self, u: Vertex, c: Color) -> Option<Vertex> {
        let w = self.neighbor(u, c)?;
        self.adj[u as usize][c as usize] = NIL;
        self.adj[w as usize][c as usize] = NIL;
        Some(w)
    }

    pub fn neighbor(&self, v: Vertex, c: Color) -> Option<Vertex> {
        let w = *self.adj.get(v as usize)?.get(c as usize)?;
        (w != NIL && c < self.colors).then_some(w)
    }

    /// Neighbour along color `c`; panics on a missing edge.
    pub fn nbr(&self, v: Vertex, c: Color) -> Vertex {
        self.neighbor(v, c)
            .unwrap_or_else(|| panic!("vertex {v} has no edge of color {c}"))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex, c: Color) -> bool {
        self.neighbor(u, c) == Some(v)
    }

    /// Colors of the edges joining `u` and `v`.
    pub fn colors_between(&self, u: Vertex, v: Vertex) -> Vec<Color> {
        (0..self.colors).filter(|&c| self.neighbor(u, c) == Some(v)).collect()
    }

    /// All edges as `(u, v, c)` with `u < v`, sorted by `(c, u, v)`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex, Color)> {
        let mut out = Vec::new();
        for c in 0..self.colors {
            for u in self.vertices() {
                if let Some(v) = self.neighbor(u, c) {
                    if u < v {
                        out.push((u, v, c));
                    }
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.vertices()
            .all(|v| (0..self.colors).all(|c| self.neighbor(v, c).is_some()))
    }

    pub fn missing_colors(&self, v: Vertex) -> Vec<Color> {
        (0..self.colors).filter(|&c| self.neighbor(v, c).is_none()).collect()
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<Color> = (0..self.colors).collect();
        crate::residues(self, &all).count <= 1
    }

    /// Checks that every edge joins the two stored classes.
    pub fn classes_consistent(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v, _)| self.class(u) != self.class(v))
    }

    /// Renumbers live vertices densely. Class-0 vertices get even ids and
    /// class-1 vertices odd ids when the two classes have equal size; the
    /// relative order inside a class is kept. Returns the new gem and the map
    /// old slot -> new id (`None` for dead slots).
    pub fn compacted(&self) -> (Gem, Vec<Option<Vertex>>) {
        let zeros: Vec<Vertex> = self.vertices().filter(|&v| self.class(v) == 0).collect();
        let ones: Vec<Vertex> = self.vertices().filter(|&v| self.class(v) == 1).collect();
        let mut map = vec![None; self.adj.len()];
        let mut order: Vec<(Vertex, u8)> = Vec::with_capacity(self.live);
        if zeros.len() == ones.len() {
            for (k, (&a, &b)) in zeros.iter().zip(ones.iter()).enumerate() {
                map[a as usize] = Some(2 * k as Vertex);
                map[b as usize] = Some(2 * k as Vertex + 1);
                order.push((a, 0));
                order.push((b, 1));
            }
        } else {
            for (k, v) in self.vertices().enumerate() {
                map[v as usize] = Some(k as Vertex);
                order.push((v, self.class(v)));
            }
        }
        let mut h = Gem::new(self.colors()).expect("color count already checked");
        for &(_, cl) in &order {
            h.add_vertex(cl);
        }
        for (u, v, c) in self.edges() {
            let (a, b) = (map[u as usize].unwrap(), map[v as usize].unwrap());
            h.connect(a, b, c).expect("relabeling keeps the graph proper");
        }
        (h, map)
    }

    /// True when live ids are exactly `0..order` and class equals parity.
    pub fn is_compact(&self) -> bool {
        self.adj.len() == self.live
            && self.vertices().all(|v| self.class(v) == (v % 2) as u8)
    }

    /// BFS 2-coloring of the underlying graph; `None` if an odd cycle exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut col = vec![u8::MAX; self.adj.len()];
        for s in self.vertices() {
            if col[s as usize] != u8::MAX {
                continue;
            }
            col[s as usize] = self.class(s);
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for c in 0..self.colors {
                    if let Some(y) = self.neighbor(x, c) {
                        if col[y as usize] == u8::MAX {
                            col[y as usize] = 1 - col[x as usize];
                            q.push_back(y);
                        } else if col[y as usize] == col[x as usize] {
                            return None;
                        }
                    }
                }
            }
        }
        Some(col)
    }

    /// Overwrites stored classes with a proper 2-coloring if one exists.
    pub fn recompute_classes(&mut self) -> bool {
        match self.two_coloring() {
            Some(col) => {
                for v in 0..self.adj.len() {
                    if self.alive[v] {
                        self.class[v] = col[v];
                    }
                }
                true
            }
            None => false,
        }
    }

    /// Copy with only the listed colors, renumbered `0..k` in the given order.
    pub fn restrict_colors(&self, keep: &[Color]) -> Result<Gem, GemError> {
        let mut h = Gem::new(keep.len())?;
        for v in 0..self.adj.len() as Vertex {
            let id = h.add_vertex(self.class[v as usize]);
            if !self.alive[v as usize] {
                h.alive[id as usize] = false;
                h.live -= 1;
            }
        }
        for (k, &c) in keep.iter().enumerate() {
            for u in self.vertices() {
                if let Some(v) = self.neighbor(u, c) {
                    if u < v {
                        h.connect(u, v, k as Color)?;
                    }
                }
            }
        }
        Ok(h)
    }

    /// Copy with an extra (empty) top color.
    pub fn with_extra_color(&self) -> Result<Gem, GemError> {
        let mut h = self.clone();
        if self.colors() + 1 > MAX_COLORS {
            return Err(GemError::BadColorCount(self.colors() + 1));
        }
        h.colors += 1;
        Ok(h)
    }
}

/// A gem whose top color may be missing at some vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryGem(Gem);

impl BoundaryGem {
    pub fn new(g: Gem) -> Result<Self, GemError> {
        let top = (g.colors() - 1) as Color;
        for v in g.vertices() {
            for c in 0..top {
                if g.neighbor(v, c).is_none() {
                    return Err(GemError::MissingColor {
                        vertex: v,
                        color: c,
                    });
                }
            }
        }
        Ok(BoundaryGem(g))
    }

    pub fn gem(&self) -> &Gem {
        &self.0
    }

    pub fn into_inner(self) -> Gem {
        self.0
    }

    pub fn boundary_vertices(&self) -> Vec<Vertex> {
        let top = (self.0.colors() - 1) as Color;
        self.0
            .vertices()
            .filter(|&v| self.0.neighbor(v, top).is_none())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Defect {
    MissingColor { vertex: Vertex, color: Color },
    ColorClash { vertex: Vertex, color: Color },
    Loop { vertex: Vertex },
    VertexOutOfRange { vertex: Vertex },
    OddOrder { order: usize },
    OddCycle { witness: Vec<Vertex> },
    ClassMismatch { u: Vertex, v: Vertex, color: Color },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub order: usize,
    pub regular: bool,
    pub proper: bool,
    pub even_order: bool,
    pub bipartite: bool,
    pub connected: bool,
    pub defects: Vec<Defect>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.regular && self.proper && self.even_order && self.bipartite
    }
}

/// Checks the gem conditions on a live graph value.
pub fn validate_gem(g: &Gem) -> ValidationReport {
    let mut defects = Vec::new();
    for v in g.vertices() {
        for c in g.missing_colors(v) {
            defects.push(Defect::MissingColor { vertex: v, color: c });
        }
    }
    let regular = defects.is_empty();
    let order = g.order();
    let even_order = order % 2 == 0;
    if !even_order {
        defects.push(Defect::OddOrder { order });
    }
    let mut bipartite = true;
    if let Some(w) = odd_cycle(g) {
        bipartite = false;
        defects.push(Defect::OddCycle { witness: w });
    } else {
        for (u, v, c) in g.edges() {
            if g.class(u) == g.class(v) {
                bipartite = false;
                defects.push(Defect::ClassMismatch { u, v, color: c });
            }
        }
    }
    ValidationReport {
        order,
        regular,
        proper: true,
        even_order,
        bipartite,
        connected: g.is_connected(),
        defects,
    }
}

/// Validates a raw edge list before it becomes a [`Gem`]: catches color
/// clashes that the adjacency representation cannot hold.
pub fn validate_edge_list(
    colors: usize,
    order: usize,
    edges: &[(Vertex, Vertex, Color)],
) -> ValidationReport {
    let mut defects = Vec::new();
    let mut seen = vec![[0u8; MAX_COLORS]; order];
    let mut proper = true;
    for &(u, v, c) in edges {
        if u as usize >= order || v as usize >= order {
            defects.push(Defect::VertexOutOfRange {
                vertex: u.max(v),
            });
            proper = false;
            continue;
        }
        if c as usize >= colors {
            proper = false;
            continue;
        }
        if u == v {
            defects.push(Defect::Loop { vertex: u });
            proper = false;
        }
        for w in [u, v] {
            seen[w as usize][c as usize] += 1;
            if seen[w as usize][c as usize] == 2 {
                defects.push(Defect::ColorClash { vertex: w, color: c });
                proper = false;
            }
        }
    }
    let mut regular = true;
    for (v, s) in seen.iter().enumerate() {
        for (c, &k) in s.iter().take(colors).enumerate() {
            if k == 0 {
                regular = false;
                defects.push(Defect::MissingColor {
                    vertex: v as Vertex,
                    color: c as Color,
                });
            }
        }
    }
    let even_order = order % 2 == 0;
    if !even_order {
        defects.push(Defect::OddOrder { order });
    }
    let (bipartite, connected) = if proper {
        let mut g = Gem::with_order(colors, order).expect("color count");
        for &(u, v, c) in edges {
            g.connect(u, v, c).expect("checked proper");
        }
        let w = odd_cycle(&g);
        if let Some(w) = &w {
            defects.push(Defect::OddCycle { witness: w.clone() });
        }
        (w.is_none(), g.is_connected())
    } else {
        (false, false)
    };
    ValidationReport {
        order,
        regular,
        proper,
        even_order,
        bipartite,
        connected,
        defects,
    }
}

/// Returns the vertices of an odd closed walk if the graph is not bipartite.
fn odd_cycle(g: &Gem) -> Option<Vec<Vertex>> {
    let mut col = vec![u8::MAX; g.slot_count()];
    let mut parent = vec![NIL; g.slot_count()];
    for s in g.vertices() {
        if col[s as usize] != u8::MAX {
            continue;
        }
        col[s as usize] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for c in 0..g.colors() as Color {
                let Some(y) = g.neighbor(x, c) else { continue };
                if col[y as usize] == u8::MAX {
                    col[y as usize] = 1 - col[x as usize];
                    parent[y as usize] = x;
                    q.push_back(y);
                } else if col[y as usize] == col[x as usize] {
                    let path = |mut a: Vertex| {
                        let mut p = vec![a];
                        while parent[a as usize] != NIL {
                            a = parent[a as usize];
                            p.push(a);
                        }
                        p
                    };
                    let (px, py) = (path(x), path(y));
                    let mut w: Vec<Vertex> = px.iter().copied().filter(|v| !py.contains(v)).collect();
                    let meet = px.iter().copied().find(|v| py.contains(v)).unwrap_or(s);
                    w.push(meet);
                    w.extend(py.iter().copied().take_while(|&v| v != meet).collect::<Vec<_>>().into_iter().rev());
                    return Some(w);
                }
            }
        }
    }
    None
}
