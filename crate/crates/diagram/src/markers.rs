use crate::curls::{AugmentedDiagram, Site};
use crate::kd::{KirbyDiagram, Piece, Side};
use crate::{Arc, DiagramError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// `h_arc` runs from the overcrossing part into the undercrossing part,
/// `h_prime_arc` the other way. They coincide when every crossing of the
/// component is an undercrossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DottedSplit {
    pub component: usize,
    pub h_arc: Arc,
    pub h_prime_arc: Arc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DottedMarker {
    pub component: usize,
    pub h_arc: Arc,
    pub h_prime_arc: Arc,
    /// Side of both arcs facing the shared region.
    pub side: Side,
    /// A face of the merged region.
    pub region: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedMarker {
    pub component: usize,
    pub site: Site,
    /// Highlighted pieces, starting at the far piece of the site.
    pub y: Vec<Piece>,
    pub direction: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkerPlan {
    pub dotted: Vec<DottedMarker>,
    pub framed: Vec<FramedMarker>,
    /// Crossings whose undercrossing is passed by some `Y_j` before its
    /// overcrossing is highlighted.
    pub doublings: Vec<usize>,
    /// Undercrossings passed after the overcrossing was already highlighted.
    pub over_first: Vec<usize>,
    pub u: usize,
    pub s_bar: usize,
}

/// Finds the arcs where component `i` switches between overcrossings and
/// undercrossings.
pub fn split_dotted(d: &KirbyDiagram, i: usize) -> Result<DottedSplit, DiagramError> {
    let c = &d.components[i];
    let pos = |e: Option<(usize, u8)>| e.map(|e| e.1);
    let under = |a: Arc| pos(d.head(a)) == Some(0);
    let h: Vec<Arc> = c
        .arcs
        .iter()
        .copied()
        .filter(|&a| pos(d.tail(a)).is_some_and(|p| p % 2 == 1) && under(a))
        .collect();
    let hp: Vec<Arc> = c
        .arcs
        .iter()
        .copied()
        .filter(|&a| pos(d.tail(a)) == Some(2) && pos(d.head(a)).is_some_and(|p| p % 2 == 1))
        .collect();
    let pinned = d.pins.hs.iter().find(|p| p.0 == i);
    if let Some(&(_, a, b)) = pinned {
        let ok = (h.contains(&a) && hp.contains(&b))
            || (a == b && h.is_empty() && hp.is_empty() && c.arcs.contains(&a));
        if !ok {
            return Err(DiagramError::BadPin(format!(
                "H component={i} arcs={a},{b} does not split the component"
            )));
        }
    }
    if c.arcs.iter().all(|&a| under(a)) {
        return Ok(DottedSplit {
            component: i,
            h_arc: c.arcs[0],
            h_prime_arc: c.arcs[0],
        });
    }
    if !c.arcs.iter().any(|&a| under(a)) {
        return Err(DiagramError::DottedWithoutUndercrossing(i));
    }
    match (h.as_slice(), hp.as_slice()) {
        ([a], [b]) => Ok(DottedSplit {
            component: i,
            h_arc: *a,
            h_prime_arc: *b,
        }),
        _ => Err(DiagramError::NotSeparable(i)),
    }
}

struct Uf(Vec<usize>);

impl Uf {
    fn new(n: usize) -> Self {
        Uf((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// `len` consecutive pieces from the far piece of the site.
pub fn y_sequence(aug: &AugmentedDiagram, s: &Site, len: usize) -> (Vec<Piece>, i32) {
    let cyc = aug.pieces(s.component);
    let (far, d) = aug.far_piece(s);
    let k = cyc.iter().position(|p| *p == far).expect("far piece on component") as i64;
    let n = cyc.len() as i64;
    let seq = (0..len as i64)
        .map(|t| cyc[(k + d as i64 * t).rem_euclid(n) as usize])
        .collect();
    (seq, d)
}

/// The piece of the arc at slot `p` of crossing `z` that touches `z`.
pub fn end_piece(aug: &AugmentedDiagram, z: usize, p: u8) -> Piece {
    let a = aug.base.crossings[z][p as usize];
    if aug.base.tail(a) == Some((z, p)) {
        Piece { arc: a, index: 0 }
    } else {
        Piece {
            arc: a,
            index: aug.curls_on(a).len(),
        }
    }
}

/// Event of the highlighting walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// Piece highlighted; `index` is its position in `Y_j`.
    Piece { component: usize, index: usize, piece: Piece },
    /// Undercrossing passed before its overcrossing.
    Double(usize),
    /// Undercrossing passed after its overcrossing.
    OverFirst(usize),
}

/// Walks the `Y_j` in component order, reporting undercrossings as they are
/// passed.
pub fn traverse(aug: &AugmentedDiagram, framed: &[FramedMarker]) -> Vec<Step> {
    let mut out = Vec::new();
    let mut lit: Vec<Piece> = Vec::new();
    for f in framed {
        for (t, &p) in f.y.iter().enumerate() {
            if t > 0 && p.arc != f.y[t - 1].arc {
                let prev = f.y[t - 1].arc;
                let (z, pos) = if f.direction < 0 {
                    aug.base.tail(prev)
                } else {
                    aug.base.head(prev)
                }
                .expect("arc with crossings");
                if pos == 0 || pos == 2 {
                    let over_lit = [1, 3].iter().any(|&q| lit.contains(&end_piece(aug, z, q)));
                    out.push(if over_lit { Step::OverFirst(z) } else { Step::Double(z) });
                }
            }
            out.push(Step::Piece {
                component: f.component,
                index: t,
                piece: p,
            });
            lit.push(p);
        }
    }
    out
}

fn framed_components(aug: &AugmentedDiagram) -> Vec<usize> {
    (0..aug.base.l())
        .filter(|&j| !aug.base.components[j].is_dotted())
        .collect()
}

/// Site choices and, when pinned, the forced `Y_j` length.
fn site_choices(
    aug: &AugmentedDiagram,
    j: usize,
) -> Result<(Vec<Site>, Option<usize>), DiagramError> {
    let sites: Vec<Site> = aug.sites_of(j).copied().collect();
    let Some((_, pin)) = aug.base.pins.ys.iter().find(|p| p.0 == j) else {
        return Ok((sites, None));
    };
    let ok: Vec<Site> = sites
        .into_iter()
        .filter(|s| y_sequence(aug, s, pin.len()).0 == *pin)
        .collect();
    if ok.is_empty() || pin.len() >= aug.pieces(j).len() {
        return Err(DiagramError::BadPin(format!(
            "Y component={j} is not a proper run of pieces starting beyond a curl site"
        )));
    }
    Ok((ok, Some(pin.len())))
}

/// Valid marker plans, shortest total `|Y|` first, ties broken by site
/// choice and then by per-component lengths. At most `limit` are returned.
pub fn marker_plans(aug: &AugmentedDiagram, limit: usize) -> Result<Vec<MarkerPlan>, DiagramError> {
    let d = &aug.base;
    let splits: Vec<DottedSplit> = (0..d.m()).map(|i| split_dotted(d, i)).collect::<Result<_, _>>()?;
    let js = framed_components(aug);
    let mut choices = Vec::new();
    for &j in &js {
        let (s, fixed) = site_choices(aug, j)?;
        if s.is_empty() {
            return Err(DiagramError::NoPlanFound(format!("component {j} has no quadricolor site")));
        }
        let max = aug.pieces(j).len() - 1;
        choices.push((s, fixed.map_or(0..=max, |n| n..=n)));
    }
    let max_total: usize = choices.iter().map(|c| *c.1.end()).sum();
    let mut out = Vec::new();
    let mut blocked = None;
    for total in 0..=max_total {
        for pick in product(&choices.iter().map(|c| c.0.len()).collect::<Vec<_>>()) {
            for lens in compositions(total, &choices.iter().map(|c| c.1.clone()).collect::<Vec<_>>()) {
                let sites: Vec<Site> = pick.iter().zip(&choices).map(|(&k, c)| c.0[k]).collect();
                match try_plan(aug, &splits, &js, &sites, &lens) {
                    Ok(p) => {
                        out.push(p);
                        if out.len() >= limit {
                            return Ok(out);
                        }
                    }
                    Err(i) => {
                        blocked.get_or_insert(i);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        return Err(DiagramError::NoPlanFound(format!(
            "H and H' of dotted component {} never share a region",
            blocked.unwrap_or(0)
        )));
    }
    Ok(out)
}

/// The first plan in search order.
pub fn plan_markers(aug: &AugmentedDiagram) -> Result<MarkerPlan, DiagramError> {
    Ok(marker_plans(aug, 1)?.remove(0))
}

fn try_plan(
    aug: &AugmentedDiagram,
    splits: &[DottedSplit],
    js: &[usize],
    sites: &[Site],
    lens: &[usize],
) -> Result<MarkerPlan, usize> {
    let fm = &aug.faces;
    let mut uf = Uf::new(fm.faces.len());
    let mut framed = Vec::new();
    for ((&j, s), &n) in js.iter().zip(sites).zip(lens) {
        let (far, _) = aug.far_piece(s);
        uf.union(fm.left_of(far.arc), fm.right_of(far.arc));
        let (y, direction) = y_sequence(aug, s, n);
        for p in &y {
            uf.union(fm.left_of(p.arc), fm.right_of(p.arc));
        }
        framed.push(FramedMarker {
            component: j,
            site: *s,
            y,
            direction,
        });
    }
    let mut dotted = Vec::new();
    for sp in splits {
        let (h, hp) = (sp.h_arc, sp.h_prime_arc);
        let side = if uf.find(fm.left_of(h)) == uf.find(fm.left_of(hp)) {
            Side::Left
        } else if uf.find(fm.right_of(h)) == uf.find(fm.right_of(hp)) {
            Side::Right
        } else {
            return Err(sp.component);
        };
        dotted.push(DottedMarker {
            component: sp.component,
            h_arc: h,
            h_prime_arc: hp,
            side,
            region: uf.find(fm.side_of(h, side)),
        });
    }
    let mut doublings = Vec::new();
    let mut over_first = Vec::new();
    for st in traverse(aug, &framed) {
        match st {
            Step::Double(z) => doublings.push(z),
            Step::OverFirst(z) => over_first.push(z),
            Step::Piece { .. } => {}
        }
    }
    Ok(MarkerPlan {
        dotted,
        framed,
        u: doublings.len(),
        doublings,
        over_first,
        s_bar: aug.base.s_bar(),
    })
}

fn product(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Tuples with entries in the given ranges summing to `total`, in
/// lexicographic order.
fn compositions(total: usize, ranges: &[std::ops::RangeInclusive<usize>]) -> Vec<Vec<usize>> {
    fn go(
        total: usize,
        ranges: &[std::ops::RangeInclusive<usize>],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some((r, rest)) = ranges.split_first() else {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        };
        let room: usize = rest.iter().map(|r| *r.end()).sum();
        let min_rest: usize = rest.iter().map(|r| *r.start()).sum();
        for k in r.clone() {
            if k > total || total - k < min_rest {
                break;
            }
            if total - k > room {
                continue;
            }
            cur.push(k);
            go(total - k, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, ranges, &mut Vec::new(), &mut out);
    out
}

/// Marker plans keyed by component, for pin files and reports.
pub fn y_by_component(plan: &MarkerPlan) -> BTreeMap<usize, Vec<Piece>> {
    plan.framed.iter().map(|f| (f.component, f.y.clone())).collect()
}
