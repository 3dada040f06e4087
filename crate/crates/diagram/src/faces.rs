use crate::kd::{KirbyDiagram, Side};
use crate::{Arc, DiagramError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chess {
    Alpha,
    Beta,
}

impl Chess {
    fn flip(self) -> Chess {
        match self {
            Chess::Alpha => Chess::Beta,
            Chess::Beta => Chess::Alpha,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Boundary arcs in traversal order, with the side of each arc the face
    /// lies on.
    pub boundary: Vec<(Arc, Side)>,
    pub color: Chess,
    /// Crossing corners on the boundary.
    pub crossings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    left: BTreeMap<Arc, usize>,
    right: BTreeMap<Arc, usize>,
    pub outer: usize,
    pub m_alpha: usize,
}

impl FaceMap {
    pub fn left_of(&self, a: Arc) -> usize {
        self.left[&a]
    }

    pub fn right_of(&self, a: Arc) -> usize {
        self.right[&a]
    }

    pub fn side_of(&self, a: Arc, s: Side) -> usize {
        match s {
            Side::Left => self.left_of(a),
            Side::Right => self.right_of(a),
        }
    }

    pub fn m_beta(&self) -> usize {
        self.faces.len() - self.m_alpha
    }
}

/// Traces the faces of the shadow and colors them with the outer face alpha.
pub fn faces_and_chessboard(d: &KirbyDiagram) -> Result<FaceMap, DiagramError> {
    let mut faces: Vec<Vec<(Arc, Side)>> = Vec::new();
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    if d.is_trivial_circle() {
        let a = d.components[0].arcs[0];
        faces.push(vec![(a, Side::Left)]);
        faces.push(vec![(a, Side::Right)]);
        left.insert(a, 0);
        right.insert(a, 1);
    } else {
        let mut seen = vec![[false; 4]; d.s()];
        for x in 0..d.s() {
            for i in 0..4u8 {
                if seen[x][i as usize] {
                    continue;
                }
                let k = faces.len();
                let mut f = Vec::new();
                let mut cur = (x, i);
                while !seen[cur.0][cur.1 as usize] {
                    seen[cur.0][cur.1 as usize] = true;
                    let a = d.crossings[cur.0][cur.1 as usize];
                    let e = d.arc(a);
                    let (side, next) = if e.tail == Some(cur) {
                        (Side::Left, e.head.unwrap())
                    } else {
                        (Side::Right, e.tail.unwrap())
                    };
                    f.push((a, side));
                    match side {
                        Side::Left => left.insert(a, k),
                        Side::Right => right.insert(a, k),
                    };
                    cur = (next.0, (next.1 + 3) % 4);
                }
                faces.push(f);
            }
        }
        if faces.len() != d.s() + 2 {
            return Err(DiagramError::NonPlanarFaces {
                faces: faces.len(),
                expected: d.s() + 2,
            });
        }
    }
    let outer = match d.outer.1 {
        Side::Left => left[&d.outer.0],
        Side::Right => right[&d.outer.0],
    };
    let mut color: Vec<Option<Chess>> = vec![None; faces.len()];
    color[outer] = Some(Chess::Alpha);
    let mut queue = VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        let c = color[f].unwrap();
        for &(a, s) in &faces[f] {
            let g = match s {
                Side::Left => right[&a],
                Side::Right => left[&a],
            };
            match color[g] {
                None => {
                    color[g] = Some(c.flip());
                    queue.push_back(g);
                }
                Some(x) if x == c => return Err(DiagramError::ColoringClash),
                Some(_) => {}
            }
        }
    }
    if color.iter().any(Option::is_none) {
        return Err(DiagramError::Disconnected);
    }
    let trivial = d.is_trivial_circle();
    let faces: Vec<Face> = faces
        .into_iter()
        .zip(color)
        .map(|(boundary, c)| Face {
            crossings: if trivial { 0 } else { boundary.len() },
            boundary,
            color: c.unwrap(),
        })
        .collect();
    let m_alpha = faces.iter().filter(|f| f.color == Chess::Alpha).count();
    Ok(FaceMap {
        faces,
        left,
        right,
        outer,
        m_alpha,
    })
}
