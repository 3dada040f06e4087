use gem_core::{Color, CyclicPermutation, GenusError};
use moves::MoveError;
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Debug, thiserror::Error)]
pub enum InvariantError {
    #[error("diagram has dotted components; use the Kirby bounds")]
    HasDottedComponents,
    #[error("diagram has no dotted components; use the framed bounds")]
    NoDottedComponents,
    #[error("a marker plan is needed for the Kirby bounds")]
    PlanMissing,
    #[error("gem has {0} colors, expected 5")]
    WrongColors(usize),
    #[error(transparent)]
    Genus(#[from] GenusError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    Framed,
    /// A single crossing-free framed circle.
    TrivialKnot,
    Kirby,
}

/// Upper bounds. Fields that do not apply to the case are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// `m_alpha + l`
    pub genus_alpha: Option<i64>,
    /// `s + l + 1`
    pub genus_framed: Option<i64>,
    /// `s + (l - m) + u + 1`
    pub genus_kirby_u: Option<i64>,
    /// `s + s_bar + (l - m) + 1`
    pub genus_kirby: Option<i64>,
    /// `4s - l + 2 sum(t)`
    pub complexity_framed: Option<i64>,
    /// `2s + 2 s_bar + 2m - 1 + 2 sum(t)`
    pub complexity_kirby: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// Genus of the built gem w.r.t. (1,0,2,3,4).
    pub genus_built: i64,
    /// Smallest genus over all gems examined, with its color order.
    pub genus: i64,
    pub genus_order: CyclicPermutation,
    /// Half the smallest order seen, minus one.
    pub complexity: i64,
    /// Order after merging the residues missing color 2 (framed case).
    pub merged_order: Option<usize>,
    /// Order after the dotted-arc dipole eliminations (Kirby case).
    pub dotted_reduced_order: Option<usize>,
    pub greedy_orders: Vec<usize>,
    pub seeds: Vec<Option<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub case: Case,
    pub s: usize,
    pub l: usize,
    pub m: usize,
    pub s_bar: usize,
    pub u: Option<usize>,
    pub m_alpha: usize,
    /// Number of curls added to the diagram.
    pub curls: usize,
    /// Sum of `|w - c|` per framed component, 2 where they agree.
    pub tbar_sum: usize,
    pub order: usize,
    pub genus_table: Vec<(CyclicPermutation, i64)>,
    /// `g[i][j]`: number of {i,j}-residues; zero on the diagonal.
    pub g: Vec<Vec<usize>>,
    pub singular_colors: Vec<Color>,
    pub bounds: Bounds,
    pub witnesses: Witnesses,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Two-column plain text table.
    pub fn to_table(&self) -> String {
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        let opt_u = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let mut rows: Vec<(String, String)> = vec![
            ("case".into(), format!("{:?}", self.case).to_lowercase()),
            ("s".into(), self.s.to_string()),
            ("l".into(), self.l.to_string()),
            ("m".into(), self.m.to_string()),
            ("s_bar".into(), self.s_bar.to_string()),
            ("u".into(), opt_u(self.u)),
            ("m_alpha".into(), self.m_alpha.to_string()),
            ("curls".into(), self.curls.to_string()),
            ("tbar_sum".into(), self.tbar_sum.to_string()),
            ("order".into(), self.order.to_string()),
        ];
        let sing: Vec<String> = self.singular_colors.iter().map(|c| c.to_string()).collect();
        rows.push(("singular_colors".into(), sing.join(",")));
        for (eps, g) in &self.genus_table {
            rows.push((format!("genus {eps}"), g.to_string()));
        }
        for (i, row) in self.g.iter().enumerate() {
            for (j, n) in row.iter().enumerate().skip(i + 1) {
                rows.push((format!("g_{i}{j}"), n.to_string()));
            }
        }
        let b = &self.bounds;
        rows.extend([
            ("bound genus_alpha".into(), opt(b.genus_alpha)),
            ("bound genus_framed".into(), opt(b.genus_framed)),
            ("bound genus_kirby_u".into(), opt(b.genus_kirby_u)),
            ("bound genus_kirby".into(), opt(b.genus_kirby)),
            ("bound complexity_framed".into(), opt(b.complexity_framed)),
            ("bound complexity_kirby".into(), opt(b.complexity_kirby)),
        ]);
        let w = &self.witnesses;
        rows.extend([
            ("witness genus_built".into(), w.genus_built.to_string()),
            ("witness genus".into(), format!("{} at {}", w.genus, w.genus_order)),
            ("witness complexity".into(), w.complexity.to_string()),
            ("witness merged_order".into(), opt_u(w.merged_order)),
            ("witness dotted_reduced_order".into(), opt_u(w.dotted_reduced_order)),
        ]);
        for c in &self.checks {
            let mark = if c.holds { "ok" } else { "FAILED" };
            rows.push((format!("check {}", c.name), format!("{mark} ({})", c.detail)));
        }
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            writeln!(out, "{k:<width$}  {v}").unwrap();
        }
        out
    }
}
