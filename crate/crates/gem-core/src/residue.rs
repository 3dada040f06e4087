use crate::{Color, Gem, Vertex};
use serde::{Deserialize, Serialize};

/// Connected components of the subgraph spanned by a color set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResiduePartition {
    pub colors: Vec<Color>,
    /// Block index per vertex slot; `usize::MAX` for dead slots.
    pub block: Vec<usize>,
    pub count: usize,
}

impl ResiduePartition {
    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.count];
        for (v, &b) in self.block.iter().enumerate() {
            if b != usize::MAX {
                out[b].push(v as Vertex);
            }
        }
        out
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        self.block[v as usize]
    }

    pub fn same(&self, u: Vertex, v: Vertex) -> bool {
        self.block[u as usize] == self.block[v as usize]
    }
}

/// Partitions the vertices of `g` into `colors`-residues. Blocks are numbered
/// in order of their smallest vertex.
pub fn residues(g: &Gem, colors: &[Color]) -> ResiduePartition {
    let mut block = vec![usize::MAX; g.slot_count()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in g.vertices() {
        if block[s as usize] != usize::MAX {
            continue;
        }
        block[s as usize] = count;
        stack.push(s);
        while let Some(x) = stack.pop() {
            for &c in colors {
                if let Some(y) = g.neighbor(x, c) {
                    if block[y as usize] == usize::MAX {
                        block[y as usize] = count;
                        stack.push(y);
                    }
                }
            }
        }
        count += 1;
    }
    if colors.len() == 2 && g.is_regular() {
        debug_assert!(bicolored_blocks_are_cycles(g, colors[0], colors[1], &block));
    }
    ResiduePartition {
        colors: colors.to_vec(),
        block,
        count,
    }
}

fn bicolored_blocks_are_cycles(g: &Gem, a: Color, b: Color, block: &[usize]) -> bool {
    let mut sizes = std::collections::HashMap::new();
    for v in g.vertices() {
        *sizes.entry(block[v as usize]).or_insert(0usize) += 1;
    }
    g.vertices().all(|v| {
        let n = sizes[&block[v as usize]];
        let mut len = 0;
        let mut x = v;
        loop {
            x = g.nbr(g.nbr(x, a), b);
            len += 2;
            if x == v {
                break;
            }
        }
        len == n && n % 2 == 0
    })
}

/// Number of `colors`-residues.
pub fn g_count(g: &Gem, colors: &[Color]) -> usize {
    residues(g, colors).count
}

/// One ĉ-residue re-emitted as a standalone gem.
#[derive(Clone, Debug)]
pub struct ResidueGem {
    pub gem: Gem,
    /// `vertices[k]` is the original id of new vertex `k`.
    pub vertices: Vec<Vertex>,
    /// `colors[k]` is the original color of new color `k`.
    pub colors: Vec<Color>,
}

/// Each component of the graph without color `c`, with the remaining colors
/// renumbered in increasing order.
pub fn extract_residue_gem(g: &Gem, c: Color) -> Vec<ResidueGem> {
    let keep: Vec<Color> = (0..g.colors() as Color).filter(|&k| k != c).collect();
    let part = residues(g, &keep);
    part.blocks()
        .into_iter()
        .map(|vs| sub_gem(g, &vs, &keep))
        .collect()
}

/// The `colors`-residue containing `v`, as a standalone gem.
pub fn residue_containing(g: &Gem, v: Vertex, colors: &[Color]) -> ResidueGem {
    let mut seen = std::collections::HashSet::from([v]);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &c in colors {
            if let Some(y) = g.neighbor(x, c) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    let vs: Vec<Vertex> = seen.into_iter().collect();
    sub_gem(g, &vs, colors)
}

/// Induced subgraph on `vs` restricted to `keep`, renumbered densely with the
/// even/odd parity layout when the classes balance.
pub(crate) fn sub_gem(g: &Gem, vs: &[Vertex], keep: &[Color]) -> ResidueGem {
    let mut zeros: Vec<Vertex> = vs.iter().copied().filter(|&v| g.class(v) == 0).collect();
    let mut ones: Vec<Vertex> = vs.iter().copied().filter(|&v| g.class(v) == 1).collect();
    zeros.sort_unstable();
    ones.sort_unstable();
    let order: Vec<Vertex> = if zeros.len() == ones.len() {
        zeros.iter().zip(&ones).flat_map(|(&a, &b)| [a, b]).collect()
    } else {
        let mut all = vs.to_vec();
        all.sort_unstable();
        all
    };
    let mut index = std::collections::HashMap::with_capacity(order.len());
    let mut h = Gem::new(keep.len()).expect("color count in range");
    for &v in &order {
        index.insert(v, h.add_vertex(g.class(v)));
    }
    for (k, &c) in keep.iter().enumerate() {
        for &u in &order {
            if let Some(v) = g.neighbor(u, c) {
                if u < v {
                    if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                        h.connect(a, b, k as Color).expect("subgraph of a proper graph");
                    }
                }
            }
        }
    }
    ResidueGem {
        gem: h,
        vertices: order,
        colors: keep.to_vec(),
    }
}
