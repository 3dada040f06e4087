use crate::{Arc, DiagramError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

/// A crossing position: crossing index and slot `0..4` in its PD quadruple.
pub type End = (usize, u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    Dotted,
    Framed(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// Arc cycle in the direction of the orientation.
    pub arcs: Vec<Arc>,
    pub kind: ComponentKind,
}

impl Component {
    pub fn is_dotted(&self) -> bool {
        self.kind == ComponentKind::Dotted
    }
}

/// One sub-segment of an arc, cut at curls: `index` counts from the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Piece {
    pub arc: Arc,
    pub index: usize,
}

impl std::fmt::Display for Piece {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}.{}", self.arc, self.index)
    }
}

/// User choices for the construction with dotted components.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pins {
    /// `(component, arc)`: curls go on this arc and the quadricolor sits at
    /// its end.
    pub xmarks: Vec<(usize, Arc)>,
    /// `(component, pieces)`: the highlighted sequence.
    pub ys: Vec<(usize, Vec<Piece>)>,
    /// `(component, H arc, H' arc)`.
    pub hs: Vec<(usize, Arc, Arc)>,
}

/// Orientation data of one arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcEnds {
    /// `None` only for a crossing-free circle.
    pub tail: Option<End>,
    pub head: Option<End>,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirbyDiagram {
    /// PD quadruples: incoming under-strand first, then counterclockwise.
    pub crossings: Vec<[Arc; 4]>,
    /// Dotted components first.
    pub components: Vec<Component>,
    pub outer: (Arc, Side),
    pub pins: Pins,
    ends: BTreeMap<Arc, ArcEnds>,
}

impl KirbyDiagram {
    /// Validates and orients a diagram.
    pub fn new(
        crossings: Vec<[Arc; 4]>,
        components: Vec<Component>,
        outer: (Arc, Side),
        pins: Pins,
    ) -> Result<Self, DiagramError> {
        let mut seen_framed = false;
        for (k, c) in components.iter().enumerate() {
            match c.kind {
                ComponentKind::Framed(_) => seen_framed = true,
                ComponentKind::Dotted if seen_framed => return Err(DiagramError::DotAfterFrame(k)),
                ComponentKind::Dotted => {}
            }
        }
        let mut occ: BTreeMap<Arc, Vec<End>> = BTreeMap::new();
        for (x, q) in crossings.iter().enumerate() {
            for (p, &a) in q.iter().enumerate() {
                occ.entry(a).or_default().push((x, p as u8));
            }
        }
        for (&a, v) in &occ {
            if v.len() != 2 {
                return Err(DiagramError::ArcArity { arc: a, count: v.len() });
            }
        }
        let mut comp_of: BTreeMap<Arc, usize> = BTreeMap::new();
        for (k, c) in components.iter().enumerate() {
            if c.arcs.is_empty() {
                return Err(DiagramError::Orientation {
                    component: k,
                    msg: "no arcs".into(),
                });
            }
            for &a in &c.arcs {
                if comp_of.insert(a, k).is_some() {
                    return Err(DiagramError::Orientation {
                        component: k,
                        msg: format!("arc {a} listed twice"),
                    });
                }
            }
        }
        for &a in occ.keys() {
            if !comp_of.contains_key(&a) {
                return Err(DiagramError::UnknownArc(a));
            }
        }
        let mut ends = BTreeMap::new();
        for (k, c) in components.iter().enumerate() {
            let free: Vec<bool> = c.arcs.iter().map(|a| !occ.contains_key(a)).collect();
            if free.iter().any(|&f| f) {
                if crossings.is_empty() && components.len() == 1 && c.arcs.len() == 1 {
                    ends.insert(
                        c.arcs[0],
                        ArcEnds {
                            tail: None,
                            head: None,
                            component: k,
                        },
                    );
                    continue;
                }
                let a = c.arcs[free.iter().position(|&f| f).unwrap()];
                return Err(DiagramError::ArcArity { arc: a, count: 0 });
            }
            orient(&crossings, &occ, k, &c.arcs, &mut ends)?;
        }
        if !ends.contains_key(&outer.0) {
            return Err(DiagramError::MissingOuterFace);
        }
        let d = KirbyDiagram {
            crossings,
            components,
            outer,
            pins,
            ends,
        };
        if !d.shadow_connected() {
            return Err(DiagramError::Disconnected);
        }
        Ok(d)
    }

    fn shadow_connected(&self) -> bool {
        let s = self.s();
        if s == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..s).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.ends.values() {
            if let (Some(t), Some(h)) = (e.tail, e.head) {
                let (a, b) = (find(&mut parent, t.0), find(&mut parent, h.0));
                parent[a] = b;
            }
        }
        let r = find(&mut parent, 0);
        (0..s).all(|x| find(&mut parent, x) == r)
    }

    /// Crossing count.
    pub fn s(&self) -> usize {
        self.crossings.len()
    }

    /// Component count.
    pub fn l(&self) -> usize {
        self.components.len()
    }

    /// Dotted component count.
    pub fn m(&self) -> usize {
        self.components.iter().filter(|c| c.is_dotted()).count()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.ends.keys().copied()
    }

    pub fn arc(&self, a: Arc) -> &ArcEnds {
        &self.ends[&a]
    }

    pub fn has_arc(&self, a: Arc) -> bool {
        self.ends.contains_key(&a)
    }

    pub fn tail(&self, a: Arc) -> Option<End> {
        self.ends[&a].tail
    }

    pub fn head(&self, a: Arc) -> Option<End> {
        self.ends[&a].head
    }

    pub fn component_of(&self, a: Arc) -> usize {
        self.ends[&a].component
    }

    /// True for the single crossing-free circle.
    pub fn is_trivial_circle(&self) -> bool {
        self.crossings.is_empty()
    }

    /// +1 when the over-strand enters at slot 3, -1 when it enters at slot 1.
    pub fn sign(&self, x: usize) -> i64 {
        let q = self.crossings[x];
        if self.head(q[3]) == Some((x, 3)) {
            1
        } else {
            -1
        }
    }

    /// Sum of the signs of the self-crossings of component `i`.
    pub fn writhe(&self, i: usize) -> i64 {
        (0..self.s())
            .filter(|&x| {
                let q = self.crossings[x];
                self.component_of(q[0]) == i && self.component_of(q[1]) == i
            })
            .map(|x| self.sign(x))
            .sum()
    }

    /// Undercrossings whose under-strand belongs to a framed component.
    pub fn s_bar(&self) -> usize {
        self.crossings
            .iter()
            .filter(|q| !self.components[self.component_of(q[0])].is_dotted())
            .count()
    }

    /// Framings of the framed link with every dot replaced by framing 0.
    pub fn associated_framed_link(&self) -> Vec<i64> {
        self.components
            .iter()
            .map(|c| match c.kind {
                ComponentKind::Dotted => 0,
                ComponentKind::Framed(k) => k,
            })
            .collect()
    }

    /// Linking number of two distinct components.
    pub fn linking(&self, i: usize, j: usize) -> i64 {
        let twice: i64 = (0..self.s())
            .filter(|&x| {
                let q = self.crossings[x];
                let (a, b) = (self.component_of(q[0]), self.component_of(q[1]));
                (a, b) == (i, j) || (a, b) == (j, i)
            })
            .map(|x| self.sign(x))
            .sum();
        twice / 2
    }

    /// Canonical `.kd` text.
    pub fn to_kd_text(&self) -> String {
        let mut s = String::new();
        for q in &self.crossings {
            writeln!(s, "X {} {} {} {}", q[0], q[1], q[2], q[3]).unwrap();
        }
        for c in &self.components {
            let arcs: Vec<String> = c.arcs.iter().map(|a| a.to_string()).collect();
            match c.kind {
                ComponentKind::Dotted => writeln!(s, "C dotted arcs= {}", arcs.join(",")),
                ComponentKind::Framed(k) => writeln!(s, "C framed {k} arcs= {}", arcs.join(",")),
            }
            .unwrap();
        }
        let side = match self.outer.1 {
            Side::Left => "left",
            Side::Right => "right",
        };
        writeln!(s, "outer arc={} side={side}", self.outer.0).unwrap();
        for &(j, a) in &self.pins.xmarks {
            writeln!(s, "Xmark component={j} after_arc={a}").unwrap();
        }
        for (j, ps) in &self.pins.ys {
            let v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
            writeln!(s, "Y component={j} segments= {}", v.join(",")).unwrap();
        }
        for &(i, a, b) in &self.pins.hs {
            writeln!(s, "H component={i} arcs={a},{b}").unwrap();
        }
        s
    }
}

fn orient(
    crossings: &[[Arc; 4]],
    occ: &BTreeMap<Arc, Vec<End>>,
    k: usize,
    arcs: &[Arc],
    out: &mut BTreeMap<Arc, ArcEnds>,
) -> Result<(), DiagramError> {
    let other = |a: Arc, e: End| -> End {
        let v = &occ[&a];
        if v[0] == e {
            v[1]
        } else {
            v[0]
        }
    };
    'choice: for choice in 0..2 {
        let mut got: Vec<(End, End)> = Vec::with_capacity(arcs.len());
        let head0 = occ[&arcs[0]][choice];
        let mut tail = other(arcs[0], head0);
        let mut head = head0;
        for m in 0..arcs.len() {
            if tail.1 == 0 || head.1 == 2 {
                continue 'choice;
            }
            got.push((tail, head));
            let next = arcs[(m + 1) % arcs.len()];
            let t = (head.0, (head.1 + 2) % 4);
            if crossings[t.0][t.1 as usize] != next {
                continue 'choice;
            }
            if m + 1 == arcs.len() {
                if t != got[0].0 {
                    continue 'choice;
                }
            } else {
                tail = t;
                head = other(next, t);
            }
        }
        for (a, (t, h)) in arcs.iter().zip(got) {
            out.insert(
                *a,
                ArcEnds {
                    tail: Some(t),
                    head: Some(h),
                    component: k,
                },
            );
        }
        return Ok(());
    }
    Err(DiagramError::Orientation {
        component: k,
        msg: "arc cycle does not follow the crossings with under-strands entering at slot 0"
            .into(),
    })
}

fn list(s: &str) -> Vec<&str> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .collect()
}

/// Parses the `.kd` format.
pub fn parse_kirby(text: &str) -> Result<KirbyDiagram, DiagramError> {
    let mut crossings = Vec::new();
    let mut components = Vec::new();
    let mut outer = None;
    let mut pins = Pins::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.split('#').next().unwrap().trim();
        if t.is_empty() {
            continue;
        }
        let err = |msg: &str| DiagramError::Syntax {
            line,
            msg: msg.to_string(),
        };
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| err(&format!("bad number `{s}`")));
        let keyval = |key: &str| -> Option<&str> {
            let pat = format!("{key}=");
            let i = t.find(&pat)?;
            let rest = t[i + pat.len()..].trim_start();
            Some(rest.split_whitespace().next().unwrap_or(""))
        };
        let tag = t.split_whitespace().next().unwrap();
        match tag {
            "X" => {
                let v: Vec<&str> = t.split_whitespace().skip(1).collect();
                if v.len() != 4 {
                    return Err(err("crossing needs four arcs"));
                }
                crossings.push([num(v[0])?, num(v[1])?, num(v[2])?, num(v[3])?]);
            }
            "C" => {
                let i = t.find("arcs=").ok_or_else(|| err("missing arcs="))?;
                let head: Vec<&str> = t[..i].split_whitespace().skip(1).collect();
                let kind = match head.as_slice() {
                    ["dotted"] => ComponentKind::Dotted,
                    ["framed", f] => ComponentKind::Framed(
                        f.parse::<i64>().map_err(|_| err("bad framing"))?,
                    ),
                    _ => return Err(err("expected `C dotted` or `C framed <int>`")),
                };
                let arcs = list(&t[i + 5..])
                    .into_iter()
                    .map(num)
                    .collect::<Result<Vec<_>, _>>()?;
                components.push(Component { arcs, kind });
            }
            "outer" => {
                let a = num(keyval("arc").ok_or_else(|| err("missing arc="))?)?;
                let side = match keyval("side") {
                    Some("left") => Side::Left,
                    Some("right") => Side::Right,
                    _ => return Err(err("side must be left or right")),
                };
                outer = Some((a, side));
            }
            "Xmark" => {
                let j = num(keyval("component").ok_or_else(|| err("missing component="))?)?;
                let a = num(keyval("after_arc").ok_or_else(|| err("missing after_arc="))?)?;
                pins.xmarks.push((j as usize, a));
            }
            "Y" => {
                let j = num(keyval("component").ok_or_else(|| err("missing component="))?)?;
                let i = t.find("segments=").ok_or_else(|| err("missing segments="))?;
                let mut ps = Vec::new();
                for tok in list(&t[i + 9..]) {
                    let (a, idx) = match tok.split_once('.') {
                        Some((a, b)) => (num(a)?, num(b)? as usize),
                        None => (num(tok)?, 0),
                    };
                    ps.push(Piece { arc: a, index: idx });
                }
                pins.ys.push((j as usize, ps));
            }
            "H" => {
                let i = num(keyval("component").ok_or_else(|| err("missing component="))?)?;
                let p = t.find("arcs=").ok_or_else(|| err("missing arcs="))?;
                let v = list(&t[p + 5..]);
                if v.len() != 2 {
                    return Err(err("H needs two arcs"));
                }
                pins.hs.push((i as usize, num(v[0])?, num(v[1])?));
            }
            _ => return Err(err(&format!("unknown record `{tag}`"))),
        }
    }
    let outer = outer.ok_or(DiagramError::MissingOuterFace)?;
    KirbyDiagram::new(crossings, components, outer, pins)
}
