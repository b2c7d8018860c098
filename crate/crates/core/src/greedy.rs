//! Greedy trees: breadth-first layouts that hand out the largest remaining
//! degrees first.

use serde::Serialize;

use crate::abc::{degree_sequence, is_tree_degree_sequence};
use crate::enumerate::canonical_code;
use crate::error::{Error, Result};
use crate::tree::{DegreeSequence, Tree};

#[derive(Clone, Debug, Serialize)]
pub struct GreedyLayout {
    #[serde(skip)]
    pub tree: Tree,
    /// Vertices in the order their degrees were assigned.
    pub bfs_order: Vec<usize>,
    pub level_of: Vec<usize>,
}

/// Builds the greedy tree of `d`.
///
/// Vertex `i` receives the `i`-th largest degree, and the children of each
/// vertex are the next unassigned ids, so every level is filled from the
/// vertices with the largest degrees down. Equal degrees are taken in the
/// order they appear in the sorted sequence; any other tie-break gives an
/// isomorphic tree.
pub fn build_greedy_tree(d: &DegreeSequence) -> Result<GreedyLayout> {
    if !is_tree_degree_sequence(d) {
        return Err(Error::Domain(format!("{d} is not the degree sequence of a tree")));
    }
    let values = d.values();
    let n = values.len();
    let mut parents = Vec::with_capacity(n - 1);
    let mut level_of = vec![0usize; n];
    let mut next = 1;
    for (v, &deg) in values.iter().enumerate() {
        let kids = if v == 0 { deg } else { deg - 1 };
        for child in next..next + kids {
            parents.push(v);
            level_of[child] = level_of[v] + 1;
        }
        next += kids;
    }
    debug_assert_eq!(next, n);
    let tree = Tree::from_parents(&parents)?;
    Ok(GreedyLayout {
        tree,
        bfs_order: (0..n).collect(),
        level_of,
    })
}

/// True iff `t` is (isomorphic to) the greedy tree of its own degree
/// sequence, i.e. some rooting at a maximum-degree vertex admits the greedy
/// breadth-first assignment.
pub fn is_greedy_layout(t: &Tree) -> bool {
    let d = degree_sequence(t);
    if !is_tree_degree_sequence(&d) {
        return t.n() == 1;
    }
    let greedy = build_greedy_tree(&d).expect("realizable");
    canonical_code(&greedy.tree) == canonical_code(t)
}
