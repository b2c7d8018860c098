//! Trees realizing a prescribed degree sequence.
//!
//! Removing the leaves of a tree with `n >= 3` leaves a skeleton tree on
//! its non-leaf vertices, and the tree is recovered by hanging
//! `d(v) - deg_skeleton(v)` leaves on each skeleton vertex. Realizations
//! are therefore assembled from the free trees on `k` vertices (the number
//! of non-leaf degrees) by distributing the non-leaf degree multiset over
//! skeleton vertices, pruning any vertex whose skeleton degree already
//! exceeds its target. Symmetric assignments are collapsed by canonical
//! code.

use std::collections::BTreeMap;

use super::{canonical_code, enumerate_trees, CanonicalCode};
use crate::abc::{degree_sequence, is_tree_degree_sequence};
use crate::error::{Error, Result};
use crate::tree::{DegreeSequence, Tree};

/// Every tree degree sequence on `n >= 2` vertices, in decreasing
/// lexicographic order.
pub fn tree_degree_sequences(n: usize) -> Vec<DegreeSequence> {
    if n < 2 {
        return Vec::new();
    }
    // d_i - 1 is a partition of n - 2 into at most n parts.
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions(n - 2, n - 2, n, &mut parts, &mut |p| {
        let mut values: Vec<usize> = p.iter().map(|x| x + 1).collect();
        values.resize(n, 1);
        out.push(DegreeSequence::new(values).expect("positive"));
    });
    out
}

fn partitions(rest: usize, max_part: usize, max_len: usize, parts: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if rest == 0 {
        emit(parts);
        return;
    }
    if parts.len() == max_len {
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        parts.push(part);
        partitions(rest - part, part, max_len, parts, emit);
        parts.pop();
    }
}

fn check_realizable(d: &DegreeSequence) -> Result<()> {
    if is_tree_degree_sequence(d) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{d} is not the degree sequence of a tree")))
    }
}

/// One tree per isomorphism class with degree multiset `d`, ordered by
/// canonical code.
pub fn enumerate_trees_with_degree_sequence(d: &DegreeSequence) -> Result<Vec<Tree>> {
    check_realizable(d)?;
    let n = d.len();
    if n == 2 {
        return Ok(vec![Tree::path(2)]);
    }
    let mut internal: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in d.values().iter().filter(|&&x| x >= 2) {
        *internal.entry(x).or_default() += 1;
    }
    let k: usize = internal.values().sum();
    let mut pool: Vec<(usize, usize)> = internal.into_iter().rev().collect();

    let mut found: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    let mut assignment = vec![0usize; k];
    for skeleton in enumerate_trees(k)? {
        assign(&skeleton, 0, &mut pool, &mut assignment, &mut |targets| {
            let tree = hang_leaves(&skeleton, targets);
            found.entry(canonical_code(&tree)).or_insert(tree);
        });
    }
    Ok(found.into_values().collect())
}

fn assign(
    skeleton: &Tree,
    v: usize,
    pool: &mut [(usize, usize)],
    assignment: &mut [usize],
    emit: &mut dyn FnMut(&[usize]),
) {
    if v == assignment.len() {
        emit(assignment);
        return;
    }
    for i in 0..pool.len() {
        let (degree, left) = pool[i];
        if left == 0 || skeleton.degree(v) > degree {
            continue;
        }
        pool[i].1 -= 1;
        assignment[v] = degree;
        assign(skeleton, v + 1, pool, assignment, emit);
        pool[i].1 += 1;
    }
}

fn hang_leaves(skeleton: &Tree, targets: &[usize]) -> Tree {
    let k = skeleton.n();
    let mut edges = skeleton.edges();
    let mut next = k;
    for (v, &target) in targets.iter().enumerate().take(k) {
        for _ in skeleton.degree(v)..target {
            edges.push((v, next));
            next += 1;
        }
    }
    Tree::from_edges(next, &edges).expect("skeleton plus leaves is a tree")
}

/// Audit path: filters the full enumeration of order `d.len()`.
pub fn filter_trees_with_degree_sequence(d: &DegreeSequence) -> Result<Vec<Tree>> {
    check_realizable(d)?;
    let mut found: BTreeMap<CanonicalCode, Tree> = BTreeMap::new();
    for t in enumerate_trees(d.len())? {
        if degree_sequence(&t) == *d {
            found.insert(canonical_code(&t), t);
        }
    }
    Ok(found.into_values().collect())
}
