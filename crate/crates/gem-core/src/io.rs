use crate::{validate_edge_list, Color, Gem, ParseGemError, Vertex, MAX_COLORS};
use std::fmt::Write;

/// Canonical `.gem` text: header, then edges sorted by `(c, u, v)`.
/// Non-compact gems are compacted first.
pub fn to_gem_text(g: &Gem) -> String {
    let owned;
    let g = if g.is_compact() {
        g
    } else {
        owned = g.compacted().0;
        &owned
    };
    let mut s = String::new();
    writeln!(s, "gem {} {}", g.colors(), g.order()).unwrap();
    for (u, v, c) in g.edges() {
        writeln!(s, "e {u} {v} {c}").unwrap();
    }
    s
}

/// Parses `.gem` text. Bipartition classes come from a BFS 2-coloring seeded
/// with the parity of the smallest vertex in each component.
pub fn parse_gem_text(text: &str) -> Result<Gem, ParseGemError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(Vertex, Vertex, Color)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut it = t.split_whitespace();
        let tag = it.next().unwrap();
        let nums: Result<Vec<u64>, _> = it.map(str::parse::<u64>).collect();
        let nums = nums.map_err(|e| ParseGemError::Syntax {
            line,
            msg: e.to_string(),
        })?;
        match (tag, header) {
            ("gem", None) => {
                if nums.len() != 2 {
                    return Err(ParseGemError::Syntax {
                        line,
                        msg: "expected `gem <colors> <order>`".into(),
                    });
                }
                let (c, o) = (nums[0] as usize, nums[1] as usize);
                if !(2..=MAX_COLORS).contains(&c) {
                    return Err(ParseGemError::Invalid(format!("unsupported color count {c}")));
                }
                header = Some((c, o));
            }
            ("gem", Some(_)) => {
                return Err(ParseGemError::Syntax {
                    line,
                    msg: "duplicate header".into(),
                })
            }
            ("e", Some(_)) => {
                if nums.len() != 3 {
                    return Err(ParseGemError::Syntax {
                        line,
                        msg: "expected `e <u> <v> <c>`".into(),
                    });
                }
                edges.push((nums[0] as Vertex, nums[1] as Vertex, nums[2] as Color));
            }
            ("e", None) => return Err(ParseGemError::MissingHeader),
            _ => {
                return Err(ParseGemError::Syntax {
                    line,
                    msg: format!("unknown record `{tag}`"),
                })
            }
        }
    }
    let (colors, order) = header.ok_or(ParseGemError::MissingHeader)?;
    for &(_, _, c) in &edges {
        if c as usize >= colors {
            return Err(ParseGemError::Invalid(format!("color {c} out of range")));
        }
    }
    let report = validate_edge_list(colors, order, &edges);
    if !report.proper {
        return Err(ParseGemError::Invalid(format!("{:?}", report.defects)));
    }
    let mut g = Gem::with_order(colors, order).map_err(|e| ParseGemError::Invalid(e.to_string()))?;
    for (u, v, c) in edges {
        g.connect(u, v, c)
            .map_err(|e| ParseGemError::Invalid(e.to_string()))?;
    }
    // keeps parity classes when the graph is not bipartite; validation reports it
    g.recompute_classes();
    Ok(g)
}
