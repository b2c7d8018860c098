//! Degree-ordering conditions: along breadth-first orders and along
//! leaf-to-leaf paths.

use std::collections::VecDeque;

use serde::Serialize;

use crate::tree::Tree;

/// Sort key for a rooted subtree: the vertex degree followed by the keys
/// of its children in decreasing order, closed by a 0. Keys are balanced
/// and therefore prefix-free, so comparing the flat encodings compares
/// `(degree, children...)` lexicographically.
fn subtree_keys(t: &Tree, root: usize) -> (Vec<Vec<u32>>, Vec<Vec<usize>>) {
    let rooted = t.rooted(root);
    let n = t.n();
    let mut keys: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in rooted.order().iter().rev() {
        let mut kids: Vec<usize> = rooted.children(v).collect();
        kids.sort_by(|&a, &b| keys[b].cmp(&keys[a]).then(a.cmp(&b)));
        let mut key = Vec::with_capacity(2 + kids.iter().map(|&c| keys[c].len()).sum::<usize>());
        key.push(t.degree(v) as u32 + 1);
        for &c in &kids {
            key.extend_from_slice(&keys[c]);
        }
        key.push(0);
        keys[v] = key;
        children[v] = kids;
    }
    (keys, children)
}

/// Breadth-first order from `root`, visiting the children of every vertex
/// in decreasing order of `(degree, subtree)`.
pub fn degree_sorted_bfs(t: &Tree, root: usize) -> Vec<usize> {
    let (_, children) = subtree_keys(t, root);
    let mut order = Vec::with_capacity(t.n());
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        queue.extend(children[v].iter().copied());
    }
    order
}

/// Pairs `(a, b)` with `a` before `b` in [`degree_sorted_bfs`] order, both
/// of degree at least 3, and `d(a) < d(b)`.
pub fn bfs_degree_order_violations(t: &Tree, root: usize) -> Vec<(usize, usize)> {
    let big: Vec<usize> = degree_sorted_bfs(t, root)
        .into_iter()
        .filter(|&v| t.degree(v) >= 3)
        .collect();
    let mut out = Vec::new();
    for (i, &a) in big.iter().enumerate() {
        for &b in &big[i + 1..] {
            if t.degree(a) < t.degree(b) {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    /// Leaf-to-leaf vertex path `v_0 .. v_{t+1}`.
    pub path: Vec<usize>,
    pub degrees: Vec<usize>,
}

/// Interior degrees read alternately from both ends, outside in:
/// `d(v_1), d(v_t), d(v_2), d(v_{t-1}), ...`.
fn interleaved(interior: &[usize]) -> impl Iterator<Item = usize> + '_ {
    let t = interior.len();
    (0..t).map(move |i| {
        if i % 2 == 0 {
            interior[i / 2]
        } else {
            interior[t - 1 - i / 2]
        }
    })
}

fn chain_holds(interior: &[usize]) -> bool {
    let forward: Vec<usize> = interleaved(interior).collect();
    if forward.windows(2).all(|w| w[0] <= w[1]) {
        return true;
    }
    let reversed: Vec<usize> = interior.iter().rev().copied().collect();
    let backward: Vec<usize> = interleaved(&reversed).collect();
    backward.windows(2).all(|w| w[0] <= w[1])
}

/// Leaf-to-leaf paths whose interior degrees, read alternately from the two
/// ends towards the middle, fail to be non-decreasing in both
/// orientations.
pub fn path_degree_ordering_violations(t: &Tree) -> Vec<PathWitness> {
    let leaves: Vec<usize> = t.leaves().collect();
    let mut out = Vec::new();
    for (i, &a) in leaves.iter().enumerate() {
        let rooted = t.rooted(a);
        for &b in &leaves[i + 1..] {
            let mut path = vec![b];
            let mut cur = b;
            while let Some(p) = rooted.parent(cur) {
                path.push(p);
                cur = p;
            }
            let degrees: Vec<usize> = path.iter().map(|&v| t.degree(v)).collect();
            if !chain_holds(&degrees[1..degrees.len() - 1]) {
                out.push(PathWitness { path, degrees });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::build_greedy_tree;
    use crate::tree::TreeBuilder;

    #[test]
    fn interleaving_reads_outside_in() {
        let seq: Vec<usize> = interleaved(&[1, 2, 3, 4, 5]).collect();
        assert_eq!(seq, vec![1, 5, 2, 4, 3]);
        let seq: Vec<usize> = interleaved(&[1, 2, 3, 4]).collect();
        assert_eq!(seq, vec![1, 4, 2, 3]);
        assert!(chain_holds(&[3, 4, 3]));
        assert!(chain_holds(&[4, 3]));
        assert!(!chain_holds(&[3, 2, 3]));
    }

    #[test]
    fn paths_and_greedy_trees_are_clean() {
        assert!(path_degree_ordering_violations(&Tree::path(5)).is_empty());
        assert!(bfs_degree_order_violations(&Tree::path(6), 0).is_empty());
        let g = build_greedy_tree(&"4,3,3,1,1,1,1,1,1".parse().unwrap()).unwrap();
        assert!(path_degree_ordering_violations(&g.tree).is_empty());
        assert!(bfs_degree_order_violations(&g.tree, 0).is_empty());
        let g = build_greedy_tree(&"5,4,4,3,3,2,2,1,1,1,1,1,1,1,1,1,1,1".parse().unwrap()).unwrap();
        assert!(bfs_degree_order_violations(&g.tree, 0).is_empty());
        assert!(path_degree_ordering_violations(&g.tree).is_empty());
    }

    #[test]
    fn caterpillar_breaks_the_chain() {
        // spine 2 - 5 - 2 - 3 with leaves filling the degrees
        let mut b = TreeBuilder::new();
        let s1 = b.child(0);
        let s2 = b.child(s1);
        let s3 = b.child(s2);
        let s4 = b.child(s3);
        for _ in 0..3 {
            b.child(s2);
        }
        b.child(s4);
        b.child(s4);
        let t = b.build();
        assert_eq!([s1, s2, s3, s4].map(|v| t.degree(v)), [2, 5, 2, 3]);
        let bad = path_degree_ordering_violations(&t);
        assert!(!bad.is_empty());
        assert!(bad
            .iter()
            .any(|w| w.degrees[1..w.degrees.len() - 1] == [2, 5, 2, 3]
                || w.degrees[1..w.degrees.len() - 1] == [3, 2, 5, 2]));
    }

    #[test]
    fn small_degree_before_large_is_reported() {
        let mut b = TreeBuilder::new();
        let small = b.child(0);
        b.child(0);
        b.child(0);
        b.child(small);
        b.child(small);
        let grand = b.child(small);
        for _ in 0..4 {
            b.child(grand);
        }
        let t = b.build();
        assert_eq!((t.degree(small), t.degree(grand)), (4, 5));
        let v = bfs_degree_order_violations(&t, 0);
        assert!(v.contains(&(small, grand)));
    }
}
