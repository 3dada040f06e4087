use crate::dipole::{add_in_place, eliminate_in_place, DipoleHandle, DipoleSite};
use crate::quad::{smooth_quadricolor, triad_exchange, QuadricolorSite, TriadDirection};
use crate::rho::{switch_rho_pair, RhoPairHandle};
use crate::MoveError;
use gem_core::{Color, Gem, Vertex};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    Eliminate(DipoleHandle),
    Add(DipoleSite),
    Switch(RhoPairHandle),
    Triad {
        site: [Vertex; 6],
        direction: TriadDirection,
    },
    Smooth([Vertex; 4]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub mv: Move,
    pub before: usize,
    pub after: usize,
}

/// Applied moves in order. Vertex ids refer to the working gem, whose ids are
/// never reused, so replaying from the same start is exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveLog {
    pub records: Vec<MoveRecord>,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl Move {
    /// Applies the move in place.
    pub fn apply(&self, g: &mut Gem) -> Result<(), MoveError> {
        match self {
            Move::Eliminate(d) => eliminate_in_place(g, d),
            Move::Add(site) => add_in_place(g, site).map(|_| ()),
            Move::Switch(rp) => {
                *g = switch_rho_pair(g, rp)?;
                Ok(())
            }
            Move::Triad { site, direction } => {
                let q = QuadricolorSite {
                    p: *site,
                    component: 0,
                };
                *g = triad_exchange(g, &q, *direction)?;
                Ok(())
            }
            Move::Smooth(q) => {
                *g = smooth_quadricolor(g, *q)?;
                Ok(())
            }
        }
    }

    fn to_line(&self) -> String {
        match self {
            Move::Eliminate(d) => format!("move eliminate {} {} {}", d.x, d.y, join(&d.colors)),
            Move::Add(s) => {
                let b: Vec<String> = s.breaks.iter().map(|(c, v)| format!("{c}:{v}")).collect();
                format!("move add {} {}", join(&s.colors), b.join(" "))
            }
            Move::Switch(rp) => format!(
                "move switch {} {} {} {} {} {}",
                rp.color,
                rp.e.0,
                rp.e.1,
                rp.f.0,
                rp.f.1,
                join(&rp.involved)
            ),
            Move::Triad { site, direction } => {
                format!("move triad {direction} {}", join(site))
            }
            Move::Smooth(q) => format!("move smooth {}", join(q)),
        }
    }

    fn parse(line: usize, text: &str) -> Result<Move, MoveError> {
        let bad = |msg: &str| MoveError::BadLog {
            line,
            msg: msg.to_string(),
        };
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.first() != Some(&"move") || toks.len() < 2 {
            return Err(bad("expected `move <kind> ...`"));
        }
        let num = |s: &str| s.parse::<u32>().map_err(|_| bad(&format!("not a number: {s}")));
        let list = |s: &str| -> Result<Vec<u32>, MoveError> {
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',').map(num).collect()
        };
        let colors = |s: &str| -> Result<Vec<Color>, MoveError> {
            Ok(list(s)?.into_iter().map(|c| c as Color).collect())
        };
        match (toks[1], &toks[2..]) {
            ("eliminate", [x, y, cs]) => Ok(Move::Eliminate(DipoleHandle {
                x: num(x)?,
                y: num(y)?,
                colors: colors(cs)?,
            })),
            ("add", [cs, rest @ ..]) => {
                let mut breaks = Vec::new();
                for b in rest {
                    let (c, v) = b.split_once(':').ok_or_else(|| bad("expected c:v"))?;
                    breaks.push((num(c)? as Color, num(v)?));
                }
                Ok(Move::Add(DipoleSite {
                    colors: colors(cs)?,
                    breaks,
                }))
            }
            ("switch", [c, a, b, a2, b2, inv]) => Ok(Move::Switch(RhoPairHandle {
                color: num(c)? as Color,
                e: (num(a)?, num(b)?),
                f: (num(a2)?, num(b2)?),
                involved: colors(inv)?,
            })),
            ("triad", [dir, vs]) => {
                let v = list(vs)?;
                let site: [Vertex; 6] = v.try_into().map_err(|_| bad("triad needs six vertices"))?;
                Ok(Move::Triad {
                    site,
                    direction: dir.parse().map_err(|e: String| bad(&e))?,
                })
            }
            ("smooth", [vs]) => {
                let v = list(vs)?;
                let q: [Vertex; 4] = v.try_into().map_err(|_| bad("smooth needs four vertices"))?;
                Ok(Move::Smooth(q))
            }
            _ => Err(bad("unknown move")),
        }
    }
}

impl MoveLog {
    pub fn push(&mut self, mv: Move, before: usize, after: usize) {
        self.records.push(MoveRecord { mv, before, after });
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Applies a move to `g` and records it.
    pub fn apply(&mut self, g: &mut Gem, mv: Move) -> Result<(), MoveError> {
        let before = g.order();
        mv.apply(g)?;
        self.push(mv, before, g.order());
        Ok(())
    }

    /// Replays every move starting from `start`.
    pub fn replay(&self, start: &Gem) -> Result<Gem, MoveError> {
        let mut g = start.clone();
        for r in &self.records {
            r.mv.apply(&mut g)?;
        }
        Ok(g)
    }

    /// One `move <kind> <params>` line per record, with the orders as a
    /// trailing comment.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            writeln!(s, "{} # {} -> {}", r.mv.to_line(), r.before, r.after).unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<MoveLog, MoveError> {
        let mut log = MoveLog::default();
        for (k, raw) in text.lines().enumerate() {
            let body = raw.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let mv = Move::parse(k + 1, body)?;
            let (before, after) = raw
                .split_once('#')
                .and_then(|(_, c)| {
                    let (a, b) = c.split_once("->")?;
                    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
                })
                .unwrap_or((0, 0));
            log.push(mv, before, after);
        }
        Ok(log)
    }
}
