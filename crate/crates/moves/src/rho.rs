use crate::dipole::{add_in_place, eliminate_in_place, DipoleHandle, DipoleSite};
use crate::MoveError;
use gem_core::{residues, Color, CyclicPermutation, Gem, Vertex};
use serde::{Deserialize, Serialize};

/// Two edges `e = (a, b)`, `f = (a2, b2)` of color `c`, with `a` and `a2` in
/// class 0, sharing their `{c, i}`-cycle exactly for `i` in `involved`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoPairHandle {
    pub e: (Vertex, Vertex),
    pub f: (Vertex, Vertex),
    pub color: Color,
    pub involved: Vec<Color>,
}

impl RhoPairHandle {
    pub fn h(&self) -> usize {
        self.involved.len()
    }
}

fn oriented(g: &Gem, u: Vertex, c: Color) -> (Vertex, Vertex) {
    let v = g.nbr(u, c);
    if g.class(u) == 0 {
        (u, v)
    } else {
        (v, u)
    }
}

/// All rho-pairs with exactly `h` involved colors.
pub fn find_rho_pairs(g: &Gem, h: usize) -> Vec<RhoPairHandle> {
    let n = g.colors() as Color;
    let mut out = Vec::new();
    for c in 0..n {
        let parts: Vec<(Color, gem_core::ResiduePartition)> = (0..n)
            .filter(|&i| i != c)
            .map(|i| (i, residues(g, &[c, i])))
            .collect();
        let edges: Vec<(Vertex, Vertex)> = g
            .vertices()
            .filter(|&v| g.class(v) == 0 && g.neighbor(v, c).is_some())
            .map(|v| oriented(g, v, c))
            .collect();
        for (k, &e) in edges.iter().enumerate() {
            for &f in &edges[k + 1..] {
                let involved: Vec<Color> = parts
                    .iter()
                    .filter(|(_, p)| p.same(e.0, f.0))
                    .map(|&(i, _)| i)
                    .collect();
                if involved.len() == h {
                    out.push(RhoPairHandle {
                        e,
                        f,
                        color: c,
                        involved,
                    });
                }
            }
        }
    }
    out
}

fn check_handle(g: &Gem, rp: &RhoPairHandle) -> Result<(), MoveError> {
    let c = rp.color;
    let ok = |(a, b): (Vertex, Vertex)| {
        g.is_alive(a) && g.is_alive(b) && g.has_edge(a, b, c) && g.class(a) == 0
    };
    if !ok(rp.e) || !ok(rp.f) || rp.e.0 == rp.f.0 {
        return Err(MoveError::AmbiguousReconnection(format!(
            "edges {:?} and {:?} of color {c} are not two distinct edges",
            rp.e, rp.f
        )));
    }
    Ok(())
}

/// Replaces `e = (a, b)` and `f = (a2, b2)` by `(a, b2)` and `(a2, b)`.
pub fn switch_rho_pair(g: &Gem, rp: &RhoPairHandle) -> Result<Gem, MoveError> {
    check_handle(g, rp)?;
    let mut h = g.clone();
    let (a, b) = rp.e;
    let (a2, b2) = rp.f;
    h.disconnect(a, rp.color);
    h.disconnect(a2, rp.color);
    h.connect(a, b2, rp.color)?;
    h.connect(a2, b, rp.color)?;
    if cfg!(debug_assertions) && rp.h() == 2 && g.colors() == 5 && g.is_connected() && h.is_connected() {
        for eps in gem_core::all_cyclic_permutations(5) {
            let want = rho2_genus_delta(&eps, rp);
            let got = gem_core::genus_wrt(&h, &eps).unwrap() - gem_core::genus_wrt(g, &eps).unwrap();
            assert_eq!(got, want, "rho2 genus change for {eps}");
        }
    }
    Ok(h)
}

/// Expected change of the genus w.r.t. `eps` under a rho2 switch: one less
/// when both neighbours of the switched color are involved, one more when
/// neither is.
pub fn rho2_genus_delta(eps: &CyclicPermutation, rp: &RhoPairHandle) -> i64 {
    let (p, q) = eps.neighbours(rp.color);
    match (rp.involved.contains(&p), rp.involved.contains(&q)) {
        (true, true) => -1,
        (false, false) => 1,
        _ => 0,
    }
}

/// The same switch as a dipole insertion (colors not involved, `c`
/// excluded) followed by the elimination of a dipole in the involved colors.
/// Only defined for rho2-pairs in 5-colored gems.
pub fn switch_rho2_factorized(
    g: &Gem,
    rp: &RhoPairHandle,
) -> Result<(Gem, DipoleSite, DipoleHandle), MoveError> {
    check_handle(g, rp)?;
    if rp.h() != 2 || g.colors() != 5 {
        return Err(MoveError::AmbiguousReconnection(
            "factorization needs a rho2-pair in a 5-colored gem".into(),
        ));
    }
    let c = rp.color;
    let (i, j) = (rp.involved[0], rp.involved[1]);
    let free: Vec<Color> = (0..5).filter(|&k| k != c && k != i && k != j).collect();
    let (a, _) = rp.e;
    let (a2, _) = rp.f;
    let site = DipoleSite {
        colors: free,
        breaks: vec![(c, a), (i, a2), (j, a2)],
    };
    let mut h = g.clone();
    let added = add_in_place(&mut h, &site)?;
    let mut cols = vec![i, j];
    cols.sort_unstable();
    let second = DipoleHandle {
        x: added.x,
        y: a2,
        colors: cols,
    };
    eliminate_in_place(&mut h, &second)?;
    Ok((h, site, second))
}
