use crate::faces::{faces_and_chessboard, Chess, FaceMap};
use crate::kd::{ComponentKind, KirbyDiagram, Piece};
use crate::{Arc, DiagramError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A curl that can carry a quadricolor: the curl plus the neighbour
/// (undercrossing or same-sign curl) on its near side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Site {
    pub component: usize,
    pub arc: Arc,
    pub curl: usize,
    /// The neighbour lies toward the head of the arc.
    pub toward_head: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentedDiagram {
    pub base: KirbyDiagram,
    pub faces: FaceMap,
    /// Curl signs along each arc from tail to head. Missing arcs carry none.
    pub curls: BTreeMap<Arc, Vec<i8>>,
    pub writhes: Vec<i64>,
    /// `|w - c|`, or 2 when they agree; 0 for dotted components.
    pub tbar: Vec<usize>,
    pub sites: Vec<Site>,
}

impl AugmentedDiagram {
    pub fn curls_on(&self, a: Arc) -> &[i8] {
        self.curls.get(&a).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn curl_count(&self) -> usize {
        self.curls.values().map(Vec::len).sum()
    }

    pub fn component_curls(&self, i: usize) -> usize {
        self.base.components[i]
            .arcs
            .iter()
            .map(|&a| self.curls_on(a).len())
            .sum()
    }

    /// The crossing-free circle, whose pieces close up cyclically.
    pub fn is_cyclic(&self) -> bool {
        self.base.is_trivial_circle()
    }

    /// Pieces of component `i` in orientation order.
    pub fn pieces(&self, i: usize) -> Vec<Piece> {
        if self.is_cyclic() {
            let a = self.base.components[0].arcs[0];
            return (0..self.curls_on(a).len())
                .map(|index| Piece { arc: a, index })
                .collect();
        }
        let mut out = Vec::new();
        for &a in &self.base.components[i].arcs {
            for index in 0..=self.curls_on(a).len() {
                out.push(Piece { arc: a, index });
            }
        }
        out
    }

    pub fn sites_of(&self, j: usize) -> impl Iterator<Item = &Site> {
        self.sites.iter().filter(move |s| s.component == j)
    }

    /// The piece beyond the curl, away from the neighbour, and the direction
    /// (-1 toward tails, +1 toward heads) in which highlighting proceeds.
    pub fn far_piece(&self, s: &Site) -> (Piece, i32) {
        let n = s.curl;
        if s.toward_head {
            (Piece { arc: s.arc, index: n }, -1)
        } else {
            let mut index = n + 1;
            if self.is_cyclic() {
                index %= self.curls_on(s.arc).len();
            }
            (Piece { arc: s.arc, index }, 1)
        }
    }

    /// Signed framing carried by curls of component `i`.
    pub fn curl_framing(&self, i: usize) -> i64 {
        self.base.components[i]
            .arcs
            .iter()
            .flat_map(|&a| self.curls_on(a))
            .map(|&s| s as i64)
            .sum()
    }

    /// `m_alpha` with every curl drawn as a kink whose loop lies on the left
    /// of the strand; the loop takes the color of the face on the right.
    pub fn m_alpha_augmented(&self) -> usize {
        let loops = self
            .curls
            .iter()
            .map(|(&a, cs)| {
                let r = self.faces.right_of(a);
                cs.len() * usize::from(self.faces.faces[r].color == Chess::Alpha)
            })
            .sum::<usize>();
        self.faces.m_alpha + loops
    }
}

/// Curl signs for component `i` with writhe `w` and framing `c`. Components
/// without an undercrossing get an extra opposite pair when needed so that
/// two same-sign curls are adjacent.
pub fn curl_signs(w: i64, c: i64, has_under: bool) -> Vec<i8> {
    let (n, s) = if w == c {
        (0usize, 1i8)
    } else {
        ((c - w).unsigned_abs() as usize, if c > w { 1 } else { -1 })
    };
    let mut v = vec![s; n];
    if has_under {
        if n == 0 {
            v = vec![1, -1];
        }
    } else if n == 0 {
        v = vec![1, 1, -1, -1];
    } else if n == 1 {
        v = vec![s, s, -s];
    }
    v
}

fn has_undercrossing(d: &KirbyDiagram, i: usize) -> bool {
    d.components[i]
        .arcs
        .iter()
        .any(|&a| d.head(a).is_some_and(|h| h.1 == 0))
}

/// Arcs of component `i` that may carry its curls. Under an undercrossing
/// these are arcs ending in or leaving one; otherwise every arc.
pub fn curl_placements(d: &KirbyDiagram, i: usize) -> Vec<Arc> {
    let c = &d.components[i];
    let mut v: Vec<Arc> = if has_undercrossing(d, i) {
        c.arcs
            .iter()
            .copied()
            .filter(|&a| d.head(a).is_some_and(|h| h.1 == 0) || d.tail(a).is_some_and(|t| t.1 == 2))
            .collect()
    } else {
        c.arcs.clone()
    };
    v.sort_unstable();
    v
}

/// Inserts curls with the default placement (pinned arc, else lowest arc
/// id among the candidates).
pub fn plan_curls(d: &KirbyDiagram) -> Result<AugmentedDiagram, DiagramError> {
    let mut at = BTreeMap::new();
    for &(j, a) in &d.pins.xmarks {
        if j >= d.l() || d.components[j].is_dotted() || !d.components[j].arcs.contains(&a) {
            return Err(DiagramError::BadPin(format!(
                "Xmark component={j} after_arc={a} does not name an arc of a framed component"
            )));
        }
        at.insert(j, a);
    }
    plan_curls_at(d, &at)
}

/// Inserts curls, putting those of component `j` on `at[j]` when given.
pub fn plan_curls_at(
    d: &KirbyDiagram,
    at: &BTreeMap<usize, Arc>,
) -> Result<AugmentedDiagram, DiagramError> {
    let faces = faces_and_chessboard(d)?;
    let mut curls = BTreeMap::new();
    let mut writhes = Vec::new();
    let mut tbar = Vec::new();
    for (i, comp) in d.components.iter().enumerate() {
        let w = d.writhe(i);
        writhes.push(w);
        match comp.kind {
            ComponentKind::Dotted => {
                if w != 0 {
                    return Err(DiagramError::DottedWrithe {
                        component: i,
                        writhe: w,
                    });
                }
                tbar.push(0);
            }
            ComponentKind::Framed(c) => {
                tbar.push(if w == c { 2 } else { (w - c).unsigned_abs() as usize });
                let signs = if d.is_trivial_circle() && c.abs() >= 2 {
                    vec![c.signum() as i8; c.unsigned_abs() as usize]
                } else {
                    curl_signs(w, c, has_undercrossing(d, i))
                };
                let arc = match at.get(&i) {
                    Some(&a) => a,
                    None => curl_placements(d, i)[0],
                };
                curls.insert(arc, signs);
            }
        }
    }
    let mut aug = AugmentedDiagram {
        base: d.clone(),
        faces,
        curls,
        writhes,
        tbar,
        sites: Vec::new(),
    };
    aug.sites = eligible_sites(&aug);
    Ok(aug)
}

fn eligible_sites(aug: &AugmentedDiagram) -> Vec<Site> {
    let d = &aug.base;
    let mut out = Vec::new();
    for (&a, cs) in &aug.curls {
        let j = d.component_of(a);
        let t = cs.len();
        for n in 0..t {
            let (head_ok, tail_ok) = if aug.is_cyclic() {
                (cs[(n + 1) % t] == cs[n], cs[(n + t - 1) % t] == cs[n])
            } else {
                let head_under = d.head(a).is_some_and(|h| h.1 == 0);
                let tail_under = d.tail(a).is_some_and(|h| h.1 == 2);
                (
                    (n + 1 == t && head_under) || (n + 1 < t && cs[n + 1] == cs[n]),
                    (n == 0 && tail_under) || (n > 0 && cs[n - 1] == cs[n]),
                )
            };
            for (ok, toward_head) in [(head_ok, true), (tail_ok, false)] {
                if ok {
                    out.push(Site {
                        component: j,
                        arc: a,
                        curl: n,
                        toward_head,
                    });
                }
            }
        }
    }
    out
}
