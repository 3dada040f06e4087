use crate::{all_cyclic_permutations, g_count, residues, Color, CyclicPermutation, Gem, GenusError};
use rayon::prelude::*;

fn check(g: &Gem) -> Result<(), GenusError> {
    if !g.is_regular() {
        return Err(GenusError::NotRegular);
    }
    if !g.classes_consistent() || g.two_coloring().is_none() {
        return Err(GenusError::NonBipartite);
    }
    if !g.is_connected() {
        return Err(GenusError::Disconnected);
    }
    Ok(())
}

/// Genus of the regular embedding of `g` associated to `eps`:
/// `2 - 2ρ = Σ_j g(ε_j, ε_{j+1}) + (1 - n) p`.
pub fn genus_wrt(g: &Gem, eps: &CyclicPermutation) -> Result<i64, GenusError> {
    if eps.len() != g.colors() {
        return Err(GenusError::PermutationMismatch);
    }
    check(g)?;
    Ok(genus_unchecked(g, eps))
}

pub(crate) fn genus_unchecked(g: &Gem, eps: &CyclicPermutation) -> i64 {
    let n = g.dimension() as i64;
    let p = (g.order() / 2) as i64;
    let faces: i64 = eps.pairs().map(|(a, b)| g_count(g, &[a, b]) as i64).sum();
    let chi = faces + (1 - n) * p;
    debug_assert!(chi % 2 == 0 && chi <= 2, "bad face count {chi}");
    (2 - chi) / 2
}

/// Minimum genus over all cyclic permutations, with the first permutation
/// (in canonical order) attaining it.
pub fn genus_min(g: &Gem) -> Result<(i64, CyclicPermutation), GenusError> {
    check(g)?;
    let perms = all_cyclic_permutations(g.colors());
    let values: Vec<i64> = perms.par_iter().map(|e| genus_unchecked(g, e)).collect();
    let (k, &best) = values
        .iter()
        .enumerate()
        .min_by_key(|&(k, v)| (*v, k))
        .expect("at least one permutation");
    Ok((best, perms[k].clone()))
}

/// Euler characteristic of the associated pseudocomplex, counting
/// `(n-h)`-simplices as `h`-residues.
pub fn euler_characteristic(g: &Gem) -> i64 {
    let colors = g.colors();
    let n = colors - 1;
    let mut chi = 0i64;
    for mask in 0u32..(1 << colors) {
        let set: Vec<Color> = (0..colors as Color).filter(|&c| mask & (1 << c) != 0).collect();
        let h = set.len();
        if h == colors {
            continue;
        }
        // h-residues are (n-h)-simplices
        let count = if h == 0 {
            g.order() as i64
        } else {
            g_count(g, &set) as i64
        };
        let dim = n - h;
        chi += if dim % 2 == 0 { count } else { -count };
    }
    chi
}

/// A residue on three colors, with its Euler characteristic as a surface.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SurfaceResidue {
    pub colors: [Color; 3],
    pub representative: crate::Vertex,
    pub vertices: usize,
    pub chi: i64,
}

/// Every 3-colored residue of a regular gem with its characteristic
/// `V - E + F`, where faces are the bicolored cycles inside the residue.
pub fn surface_residues(g: &Gem) -> Vec<SurfaceResidue> {
    let n = g.colors() as Color;
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let part = residues(g, &[a, b, c]);
                let pairs = [
                    residues(g, &[a, b]),
                    residues(g, &[a, c]),
                    residues(g, &[b, c]),
                ];
                let mut vcount = vec![0usize; part.count];
                let mut rep = vec![crate::Vertex::MAX; part.count];
                let mut faces = vec![std::collections::HashSet::new(); part.count];
                for v in g.vertices() {
                    let k = part.block_of(v);
                    vcount[k] += 1;
                    rep[k] = rep[k].min(v);
                    for (t, pp) in pairs.iter().enumerate() {
                        faces[k].insert((t, pp.block_of(v)));
                    }
                }
                for k in 0..part.count {
                    let v = vcount[k] as i64;
                    let e = 3 * v / 2;
                    out.push(SurfaceResidue {
                        colors: [a, b, c],
                        representative: rep[k],
                        vertices: vcount[k],
                        chi: v - e + faces[k].len() as i64,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_two(colors: usize) -> Gem {
        let mut g = Gem::with_order(colors, 2).unwrap();
        for c in 0..colors as Color {
            g.connect(0, 1, c).unwrap();
        }
        g
    }

    #[test]
    fn sphere_values() {
        assert_eq!(euler_characteristic(&order_two(5)), 2);
        assert_eq!(euler_characteristic(&order_two(4)), 0);
        for e in all_cyclic_permutations(4) {
            assert_eq!(genus_wrt(&order_two(4), &e).unwrap(), 0);
        }
        assert_eq!(genus_min(&order_two(5)).unwrap().0, 0);
    }

    #[test]
    fn disconnected_fails() {
        let mut g = Gem::with_order(3, 4).unwrap();
        for c in 0..3 {
            g.connect(0, 1, c).unwrap();
            g.connect(2, 3, c).unwrap();
        }
        let e = CyclicPermutation::new(&[0, 1, 2]).unwrap();
        assert_eq!(genus_wrt(&g, &e), Err(GenusError::Disconnected));
    }
}
