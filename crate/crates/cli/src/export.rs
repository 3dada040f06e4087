use gem_core::Gem;
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GluingError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("pentachoron {0} is missing a facet partner")]
    Missing(usize),
    #[error("facet {facet} of {p} is glued to {q}, which does not glue back")]
    NotInvolution { p: usize, facet: usize, q: usize },
    #[error("facet {facet} of {p} is glued to itself")]
    FixedPoint { p: usize, facet: usize },
}

/// Facet partners: entry `c` of row `i` is the simplex glued to `i` along the
/// facet opposite its `c`-labeled vertex. Rows follow the compacted order.
pub fn gluings(g: &Gem) -> Vec<Vec<usize>> {
    let h = if g.is_compact() { g.clone() } else { g.compacted().0 };
    h.vertices()
        .map(|v| {
            (0..h.colors() as u8)
                .map(|c| h.nbr(v, c) as usize)
                .collect()
        })
        .collect()
}

pub fn gluings_text(g: &Gem) -> String {
    let mut s = String::new();
    for (i, row) in gluings(g).iter().enumerate() {
        let js: Vec<String> = row.iter().map(|j| j.to_string()).collect();
        writeln!(s, "P {i} : {}", js.join(" ")).unwrap();
    }
    s
}

/// Reads a gluing table back and checks that the partner relation is a
/// fixed-point-free involution on (simplex, facet) pairs.
pub fn parse_gluings(text: &str) -> Result<Vec<Vec<usize>>, GluingError> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| GluingError::Syntax {
            line: k + 1,
            msg: msg.into(),
        };
        let (head, tail) = t.split_once(':').ok_or_else(|| bad("expected `P <i> : ...`"))?;
        let i: usize = head
            .trim()
            .strip_prefix('P')
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| bad("expected `P <i>`"))?;
        if i != rows.len() {
            return Err(bad("rows out of order"));
        }
        let row: Result<Vec<usize>, _> = tail.split_whitespace().map(str::parse).collect();
        let row = row.map_err(|e| bad(&e.to_string()))?;
        if row.is_empty() || rows.first().is_some_and(|r| r.len() != row.len()) {
            return Err(bad("wrong number of partners"));
        }
        rows.push(row);
    }
    for (p, row) in rows.iter().enumerate() {
        for (facet, &q) in row.iter().enumerate() {
            if q == p {
                return Err(GluingError::FixedPoint { p, facet });
            }
            match rows.get(q) {
                None => return Err(GluingError::Missing(q)),
                Some(r) if r[facet] != p => return Err(GluingError::NotInvolution { p, facet, q }),
                Some(_) => {}
            }
        }
    }
    Ok(rows)
}

const PALETTE: [&str; 6] = ["black", "red", "blue", "darkgreen", "orange", "purple"];

/// Graphviz text. With `crossings = Some(s)` vertices below `8s` are grouped
/// per crossing gadget and the rest in blocks of four (one per curl).
pub fn dot_text(g: &Gem, crossings: Option<usize>) -> String {
    let h = if g.is_compact() { g.clone() } else { g.compacted().0 };
    let mut s = String::from("graph gem {\n  node [shape=circle, width=0.3];\n");
    if let Some(x) = crossings {
        let n = h.order();
        let mut start = 0;
        let mut k = 0;
        while start < n {
            let size = if start < 8 * x { 8 } else { 4 };
            let end = (start + size).min(n);
            let label = if start < 8 * x {
                format!("crossing {}", start / 8)
            } else {
                format!("curl {k}")
            };
            if start >= 8 * x {
                k += 1;
            }
            let ids: Vec<String> = (start..end).map(|v| v.to_string()).collect();
            writeln!(
                s,
                "  subgraph cluster_{start} {{ label=\"{label}\"; {}; }}",
                ids.join("; ")
            )
            .unwrap();
            start = end;
        }
    }
    for (u, v, c) in h.edges() {
        let col = PALETTE[c as usize % PALETTE.len()];
        writeln!(s, "  {u} -- {v} [color={col}, label={c}];").unwrap();
    }
    s.push_str("}\n");
    s
}
