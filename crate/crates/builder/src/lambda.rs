use crate::BuildError;
use diagram::{Arc, AugmentedDiagram, Piece, Site};
use gem_core::{Color, Gem, Vertex};
use moves::{find_quadricolors, site_from_quad, QuadricolorSite};
use std::collections::BTreeMap;

/// Vertex `s` of corner `k` of crossing `x`.
pub fn crossing_vertex(x: usize, k: u8, s: u8) -> Vertex {
    (8 * x + 2 * (k as usize % 4) + s as usize) as Vertex
}

/// The 4-colored graph of a curl-augmented diagram, with the bookkeeping
/// needed to place markers on it.
#[derive(Clone, Debug)]
pub struct Lambda {
    pub gem: Gem,
    pub aug: AugmentedDiagram,
    /// Left and right vertex lines of each arc, tail to head.
    lines: BTreeMap<Arc, [Vec<Vertex>; 2]>,
    curl_base: BTreeMap<(Arc, usize), Vertex>,
}

impl Lambda {
    pub fn curl_vertices(&self, a: Arc, n: usize) -> [Vertex; 4] {
        let b = self.curl_base[&(a, n)];
        [b, b + 1, b + 2, b + 3]
    }

    pub fn lines(&self, a: Arc) -> &[Vec<Vertex>; 2] {
        &self.lines[&a]
    }

    /// The two parallel 1-colored edges along a piece: `(left, right)`.
    pub fn piece_edges(&self, p: Piece) -> [(Vertex, Vertex); 2] {
        let [l, r] = &self.lines[&p.arc];
        if self.aug.is_cyclic() {
            let n = l.len();
            let (i, j) = ((2 * p.index + n - 1) % n, 2 * p.index);
            [(l[i], l[j]), (r[i], r[j])]
        } else {
            let t = 2 * p.index;
            [(l[t], l[t + 1]), (r[t], r[t + 1])]
        }
    }

    /// A vertex on the {1,2}-cycle of each face of the diagram.
    pub fn face_vertices(&self) -> Vec<Vertex> {
        let fm = &self.aug.faces;
        let mut out = vec![Vertex::MAX; fm.faces.len()];
        for (&a, [l, r]) in &self.lines {
            out[fm.left_of(a)] = l[0];
            out[fm.right_of(a)] = r[0];
        }
        out
    }

    /// The quadricolor at a curl site: three vertices in the curl and the
    /// pair `P4, P5` on the far piece.
    pub fn locate_quadricolor(&self, site: &Site) -> Result<QuadricolorSite, BuildError> {
        let cv = self.curl_vertices(site.arc, site.curl);
        let (far, _) = self.aug.far_piece(site);
        let [(a, b), (c, d)] = self.piece_edges(far);
        let ends = [a, b, c, d];
        find_quadricolors(&self.gem)
            .into_iter()
            .map(|q| site_from_quad(&self.gem, q, site.component))
            .find(|s| {
                [s.p[0], s.p[2], s.p[3]].iter().all(|v| cv.contains(v))
                    && ends.contains(&s.p[4])
                    && ends.contains(&s.p[5])
            })
            .ok_or_else(|| {
                BuildError::NoQuadricolor(format!(
                    "curl {} on arc {} of component {}",
                    site.curl, site.arc, site.component
                ))
            })
    }

    /// One site per framed component, in component order.
    pub fn locate_quadricolors(&self, sites: &[Site]) -> Result<Vec<QuadricolorSite>, BuildError> {
        sites.iter().map(|s| self.locate_quadricolor(s)).collect()
    }
}

fn connect(g: &mut Gem, u: Vertex, v: Vertex, c: Color) -> Result<(), BuildError> {
    g.connect(u, v, c).map_err(BuildError::from)
}

/// Pastes crossing and curl gadgets along the arcs of the diagram.
pub fn build_lambda(aug: &AugmentedDiagram) -> Result<Lambda, BuildError> {
    let d = &aug.base;
    let s = d.s();
    let order = 8 * s + 4 * aug.curl_count();
    let mut g = Gem::with_order(4, order)?;
    let cv = crossing_vertex;
    for x in 0..s {
        for k in 0..4 {
            connect(&mut g, cv(x, k, 0), cv(x, k, 1), 2)?;
        }
        for (a, b) in [((0, 1), (1, 0)), ((2, 1), (3, 0)), ((3, 1), (2, 0)), ((0, 0), (1, 1))] {
            connect(&mut g, cv(x, a.0, a.1), cv(x, b.0, b.1), 3)?;
        }
        for (a, b) in [((1, 0), (2, 1)), ((3, 0), (0, 1))] {
            connect(&mut g, cv(x, a.0, a.1), cv(x, b.0, b.1), 0)?;
        }
    }
    let mut lines = BTreeMap::new();
    let mut curl_base = BTreeMap::new();
    let mut next = (8 * s) as Vertex;
    for comp in &d.components {
        let mut lseq = Vec::new();
        let mut rseq = Vec::new();
        for &a in &comp.arcs {
            let ends = d.arc(a);
            let mut left = Vec::new();
            let mut right = Vec::new();
            if let Some((x, i)) = ends.tail {
                if i == 2 {
                    lseq.push(cv(x, 2, 0));
                    rseq.push(cv(x, 1, 1));
                }
                left.push(cv(x, i, 0));
                right.push(cv(x, i + 3, 1));
            }
            for (n, &sign) in aug.curls_on(a).iter().enumerate() {
                let b = next;
                next += 4;
                curl_base.insert((a, n), b);
                if sign < 0 {
                    let (l1, l2, r1, r2) = (b + 1, b, b + 2, b + 3);
                    left.extend([l1, l2]);
                    right.extend([r1, r2]);
                    connect(&mut g, l1, r1, 3)?;
                    connect(&mut g, l2, r2, 3)?;
                    lseq.extend([l1, r1]);
                    rseq.extend([l2, r2]);
                } else {
                    let (lr, ll, rr, rl) = (b + 1, b, b + 2, b + 3);
                    left.extend([lr, ll]);
                    right.extend([rr, rl]);
                    connect(&mut g, rr, lr, 3)?;
                    connect(&mut g, rl, ll, 3)?;
                    lseq.extend([rl, ll]);
                    rseq.extend([rr, lr]);
                }
            }
            if let Some((y, j)) = ends.head {
                left.push(cv(y, j + 3, 1));
                right.push(cv(y, j, 0));
                for line in [&left, &right] {
                    for k in 0..line.len() - 1 {
                        connect(&mut g, line[k], line[k + 1], if k % 2 == 0 { 1 } else { 2 })?;
                    }
                }
                if j == 0 {
                    lseq.push(cv(y, 3, 1));
                    rseq.push(cv(y, 0, 0));
                }
            } else {
                // crossing-free circle: lines close up
                for line in [&left, &right] {
                    let n = line.len();
                    for k in 0..n {
                        connect(&mut g, line[k], line[(k + 1) % n], if k % 2 == 0 { 2 } else { 1 })?;
                    }
                }
            }
            lines.insert(a, [left, right]);
        }
        for seq in [lseq, rseq] {
            if seq.len() < 2 || seq.len() % 2 == 1 {
                return Err(BuildError::Postcondition(
                    "component without undercrossings or curls".into(),
                ));
            }
            let off = usize::from(!g.has_edge(seq[0], seq[1], 3));
            let n = seq.len();
            for k in (0..n).step_by(2) {
                connect(&mut g, seq[(k + 1 + off) % n], seq[(k + 2 + off) % n], 0)?;
            }
        }
    }
    if let Some(v) = g.vertices().find(|&v| !g.missing_colors(v).is_empty()) {
        return Err(BuildError::PastingMismatch(v));
    }
    Ok(Lambda {
        gem: g,
        aug: aug.clone(),
        lines,
        curl_base,
    })
}
