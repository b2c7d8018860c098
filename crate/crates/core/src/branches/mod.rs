//! Structural taxonomy on rooted trees: pendant and internal paths,
//! `B_k` and `B_k*` branches, terminal vertices and branch inventories.

mod ordering;
mod paths;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::rooted_code;
use crate::tree::{Rooted, Tree};

pub use ordering::{bfs_degree_order_violations, degree_sorted_bfs, path_degree_ordering_violations, PathWitness};
pub use paths::{decompose_paths, InternalPath, PathDecomposition, PendantPath};

/// A `B_k` branch, or `B_k*` when `star` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Branch {
    pub k: usize,
    pub star: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BranchProfile {
    pub root: usize,
    /// `k -> centers` of plain `B_k` branches.
    pub b_centers: BTreeMap<usize, Vec<usize>>,
    /// `k -> centers` of `B_k*` branches.
    pub b_star_centers: BTreeMap<usize, Vec<usize>>,
    /// `(vertex, k)` for every k-terminal vertex.
    pub terminal_vertices: Vec<(usize, usize)>,
    /// Parent vertex -> `[n1, n2, n3, n4]`, the plain `B_1..B_4` children.
    pub inventory: BTreeMap<usize, [usize; 4]>,
    #[serde(skip)]
    kinds: Vec<Option<Branch>>,
}

impl BranchProfile {
    /// The branch centered at `v`, if any.
    pub fn kind(&self, v: usize) -> Option<Branch> {
        self.kinds.get(v).copied().flatten()
    }

    pub fn count(&self, k: usize) -> usize {
        self.b_centers.get(&k).map_or(0, Vec::len)
    }

    pub fn count_star(&self, k: usize) -> usize {
        self.b_star_centers.get(&k).map_or(0, Vec::len)
    }

    /// Counts of plain `B_1..B_4` children of `v`.
    pub fn inventory_of(&self, v: usize) -> [usize; 4] {
        self.inventory.get(&v).copied().unwrap_or_default()
    }

    /// Centers of all branches of either kind that hang directly below `v`.
    pub fn branch_children<'a>(
        &'a self,
        rooted: &'a Rooted<'_>,
        v: usize,
    ) -> impl Iterator<Item = (usize, Branch)> + 'a {
        rooted.children(v).filter_map(|c| self.kind(c).map(|b| (c, b)))
    }
}

/// Length of the pendant path that starts with the edge `parent - c`
/// and runs down through `c`, or `None` if the subtree of `c` is not a path.
fn arm_length(rooted: &Rooted<'_>, c: usize) -> Option<usize> {
    let mut cur = c;
    let mut len = 1;
    loop {
        match rooted.child_count(cur) {
            0 => return Some(len),
            1 => {
                cur = rooted.children(cur).next().expect("one child");
                len += 1;
            }
            _ => return None,
        }
    }
}

/// Shape of the branch centered at `v` (ignoring the parent condition on
/// `B_1`).
fn shape(rooted: &Rooted<'_>, v: usize) -> Option<Branch> {
    rooted.parent(v)?;
    let kids: Vec<usize> = rooted.children(v).collect();
    if kids.len() == 1 {
        let len = arm_length(rooted, v)?;
        return match len {
            2 => Some(Branch { k: 1, star: false }),
            3 => Some(Branch { k: 1, star: true }),
            _ => None,
        };
    }
    if kids.len() < 2 {
        return None;
    }
    let mut threes = 0;
    for &c in &kids {
        match arm_length(rooted, c)? {
            2 => {}
            3 => threes += 1,
            _ => return None,
        }
    }
    match threes {
        0 => Some(Branch {
            k: kids.len(),
            star: false,
        }),
        1 => Some(Branch {
            k: kids.len(),
            star: true,
        }),
        _ => None,
    }
}

/// Classifies the branches of `t` rooted at `root`.
///
/// `B_1` and `B_1*` centers additionally need a sibling of degree at least
/// 3. A `B_k*` center is listed only under the star variant.
pub fn classify_branches(t: &Tree, root: usize) -> BranchProfile {
    let rooted = t.rooted(root);
    let n = t.n();
    let kinds: Vec<Option<Branch>> = (0..n)
        .map(|v| {
            let b = shape(&rooted, v)?;
            if b.k == 1 {
                let p = rooted.parent(v).expect("non-root");
                if !rooted.children(p).any(|c| t.degree(c) >= 3) {
                    return None;
                }
            }
            Some(b)
        })
        .collect();

    let mut profile = BranchProfile {
        root,
        ..Default::default()
    };
    for (v, kind) in kinds.iter().enumerate() {
        let Some(b) = kind else { continue };
        let map = if b.star {
            &mut profile.b_star_centers
        } else {
            &mut profile.b_centers
        };
        map.entry(b.k).or_default().push(v);
        if !b.star && b.k <= 4 {
            let p = rooted.parent(v).expect("non-root");
            profile.inventory.entry(p).or_default()[b.k - 1] += 1;
        }
    }
    for v in 0..n {
        let deg = t.degree(v);
        if deg < 3 || kinds[v].is_some() {
            continue;
        }
        let mut any = false;
        let mut has_b1 = false;
        let mut all = true;
        for c in rooted.children(v) {
            any = true;
            match kinds[c] {
                Some(b) => has_b1 |= b.k == 1,
                None => all = false,
            }
        }
        if any && all && has_b1 && rooted.child_count(v) == deg - 1 {
            profile.terminal_vertices.push((v, deg - 1));
        }
    }
    profile.kinds = kinds;
    profile
}

/// One maximum-degree vertex per distinct rooted shape, ordered by rooted
/// code and then by id.
pub fn max_degree_roots(t: &Tree) -> Vec<usize> {
    let max = t.max_degree();
    let mut by_code: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for v in (0..t.n()).filter(|&v| t.degree(v) == max) {
        by_code.entry(rooted_code(t, v)).or_insert(v);
    }
    by_code.into_values().collect()
}

/// The rooting convention: a maximum-degree vertex with the smallest rooted
/// code, then the smallest id.
pub fn default_root(t: &Tree) -> usize {
    max_degree_roots(t)[0]
}
