use crate::Color;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A cyclic ordering of `0..len`, stored up to rotation and reversal.
///
/// Canonical form starts with 0 and has `seq[1] < seq[len-1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CyclicPermutation(Vec<Color>);

impl CyclicPermutation {
    /// Builds the canonical representative of the cyclic ordering `seq`.
    /// Returns `None` unless `seq` is a permutation of `0..seq.len()`.
    pub fn new(seq: &[Color]) -> Option<Self> {
        let n = seq.len();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        for &c in seq {
            if c as usize >= n || seen[c as usize] {
                return None;
            }
            seen[c as usize] = true;
        }
        let z = seq.iter().position(|&c| c == 0).unwrap();
        let mut rot: Vec<Color> = (0..n).map(|k| seq[(z + k) % n]).collect();
        if n > 2 && rot[1] > rot[n - 1] {
            rot[1..].reverse();
        }
        Some(CyclicPermutation(rot))
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive pairs `(ε_j, ε_{j+1})`, wrapping around.
    pub fn pairs(&self) -> impl Iterator<Item = (Color, Color)> + '_ {
        let n = self.0.len();
        (0..n).map(move |j| (self.0[j], self.0[(j + 1) % n]))
    }

    /// Neighbours of color `c` in the cycle.
    pub fn neighbours(&self, c: Color) -> (Color, Color) {
        let n = self.0.len();
        let k = self.0.iter().position(|&x| x == c).expect("color in permutation");
        (self.0[(k + n - 1) % n], self.0[(k + 1) % n])
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Every cyclic permutation of `0..len` up to inverse, sorted.
/// There are `(len-1)!/2` of them for `len >= 3`.
pub fn all_cyclic_permutations(len: usize) -> Vec<CyclicPermutation> {
    let mut rest: Vec<Color> = (1..len as Color).collect();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut |tail| {
        if tail.len() < 2 || tail[0] < tail[tail.len() - 1] {
            let mut seq = vec![0];
            seq.extend_from_slice(tail);
            out.push(CyclicPermutation(seq));
        }
    });
    out.sort();
    out
}

fn permute(v: &mut Vec<Color>, k: usize, f: &mut impl FnMut(&[Color])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}
