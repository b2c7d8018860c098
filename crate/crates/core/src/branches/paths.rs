use serde::Serialize;

use crate::tree::Tree;

/// `start (d > 2) - ... - leaf`, all interior vertices of degree 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PendantPath {
    pub start: usize,
    pub leaf: usize,
    pub length: usize,
}

/// A path between two vertices of degree greater than 2 whose interior
/// vertices all have degree 2. Single edges count as length-1 internal
/// paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct InternalPath {
    pub ends: (usize, usize),
    pub length: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathDecomposition {
    pub pendant_paths: Vec<PendantPath>,
    pub internal_paths: Vec<InternalPath>,
    /// Set when the tree has no vertex of degree above 2, i.e. it is itself
    /// a path; holds its length in edges.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub whole_path: Option<usize>,
}

impl PathDecomposition {
    pub fn pendant_lengths(&self) -> Vec<usize> {
        self.pendant_paths.iter().map(|p| p.length).collect()
    }
}

/// Walks from `from` through `next` while the current vertex has degree 2;
/// returns the first vertex of degree != 2 and the number of edges taken.
fn walk(t: &Tree, from: usize, next: usize) -> (usize, usize) {
    let (mut prev, mut cur, mut len) = (from, next, 1);
    while t.degree(cur) == 2 {
        let nb = t.neighbors(cur);
        let step = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = step;
        len += 1;
    }
    (cur, len)
}

pub fn decompose_paths(t: &Tree) -> PathDecomposition {
    if t.max_degree() <= 2 {
        return PathDecomposition {
            whole_path: Some(t.n() - 1),
            ..Default::default()
        };
    }
    let mut out = PathDecomposition::default();
    for v in (0..t.n()).filter(|&v| t.degree(v) > 2) {
        for &w in t.neighbors(v) {
            let (end, length) = walk(t, v, w);
            if t.degree(end) == 1 {
                out.pendant_paths.push(PendantPath {
                    start: v,
                    leaf: end,
                    length,
                });
            } else if v < end {
                out.internal_paths.push(InternalPath { ends: (v, end), length });
            }
        }
    }
    out.pendant_paths.sort();
    out.internal_paths.sort();
    out
}
