use crate::{residues, Color, Gem, Vertex};

/// Decides whether a color-preserving vertex bijection `g -> h` exists.
///
/// Colors are fixed pointwise, so inside a connected component the image of
/// one vertex determines everything; components are matched by backtracking.
/// The witness maps each live vertex slot of `g` to a vertex of `h`.
pub fn color_isomorphic(g: &Gem, h: &Gem) -> Option<Vec<Option<Vertex>>> {
    if g.colors() != h.colors() || g.order() != h.order() {
        return None;
    }
    let all: Vec<Color> = (0..g.colors() as Color).collect();
    let gc = residues(g, &all).blocks();
    let hc = residues(h, &all).blocks();
    if gc.len() != hc.len() {
        return None;
    }
    let mut map = vec![None; g.slot_count()];
    let mut used = vec![false; hc.len()];
    if match_components(g, h, &gc, &hc, 0, &mut used, &mut map) {
        Some(map)
    } else {
        None
    }
}

fn match_components(
    g: &Gem,
    h: &Gem,
    gc: &[Vec<Vertex>],
    hc: &[Vec<Vertex>],
    k: usize,
    used: &mut [bool],
    map: &mut [Option<Vertex>],
) -> bool {
    if k == gc.len() {
        return true;
    }
    let root = gc[k][0];
    for j in 0..hc.len() {
        if used[j] || hc[j].len() != gc[k].len() {
            continue;
        }
        for &cand in &hc[j] {
            if let Some(pairs) = extend(g, h, root, cand) {
                for &(a, b) in &pairs {
                    map[a as usize] = Some(b);
                }
                used[j] = true;
                if match_components(g, h, gc, hc, k + 1, used, map) {
                    return true;
                }
                used[j] = false;
                for &(a, _) in &pairs {
                    map[a as usize] = None;
                }
            }
        }
    }
    false
}

/// Propagates `root -> cand` along colored edges; `None` on conflict.
fn extend(g: &Gem, h: &Gem, root: Vertex, cand: Vertex) -> Option<Vec<(Vertex, Vertex)>> {
    use std::collections::HashMap;
    let mut fwd: HashMap<Vertex, Vertex> = HashMap::new();
    let mut bwd: HashMap<Vertex, Vertex> = HashMap::new();
    fwd.insert(root, cand);
    bwd.insert(cand, root);
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        let y = fwd[&x];
        for c in 0..g.colors() as Color {
            match (g.neighbor(x, c), h.neighbor(y, c)) {
                (None, None) => {}
                (Some(a), Some(b)) => match (fwd.get(&a), bwd.get(&b)) {
                    (None, None) => {
                        fwd.insert(a, b);
                        bwd.insert(b, a);
                        stack.push(a);
                    }
                    (Some(&b2), Some(&a2)) if b2 == b && a2 == a => {}
                    _ => return None,
                },
                _ => return None,
            }
        }
    }
    Some(fwd.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_mismatch_short_circuits() {
        let mut g = Gem::with_order(3, 2).unwrap();
        let mut h = Gem::with_order(3, 4).unwrap();
        for c in 0..3 {
            g.connect(0, 1, c).unwrap();
            h.connect(0, 1, c).unwrap();
            h.connect(2, 3, c).unwrap();
        }
        assert!(color_isomorphic(&g, &h).is_none());
        let w = color_isomorphic(&g, &g).unwrap();
        assert_eq!(w, vec![Some(0), Some(1)]);
    }
}
