//! Oracles written independently of the library code paths they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use abc_core::Tree;

/// ABC index straight from the edge list.
pub fn abc_oracle(t: &Tree) -> f64 {
    let deg = t.degrees();
    t.edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (deg[a] as f64, deg[b] as f64);
            ((x + y - 2.0) / (x * y)).sqrt()
        })
        .sum()
}

pub fn f(x: f64, y: f64) -> f64 {
    ((x + y - 2.0) / (x * y)).sqrt()
}

/// Adjacency lists of the labeled tree with Prüfer sequence `seq`.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut adj = vec![Vec::new(); n];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        link(leaf, s, &mut adj);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    link(rest[0], rest[1], &mut adj);
    adj
}

fn rooted_string(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&c| c != parent)
        .map(|&c| rooted_string(adj, c, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism key: the smallest parenthesis string over the tree's
/// center vertices, found by peeling leaves.
pub fn center_key(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    if n == 1 {
        return "()".into();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_string(adj, c, usize::MAX))
        .min()
        .expect("one or two centers")
}

pub fn tree_adj(t: &Tree) -> Vec<Vec<usize>> {
    (0..t.n()).map(|v| t.neighbors(v).to_vec()).collect()
}

/// Isomorphism classes of all labeled trees on `n` vertices.
pub fn prufer_classes(n: usize) -> BTreeSet<String> {
    if n <= 2 {
        let adj = if n == 1 { vec![vec![]] } else { vec![vec![1], vec![0]] };
        return BTreeSet::from([center_key(&adj)]);
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut classes = BTreeSet::new();
    loop {
        classes.insert(center_key(&prufer_decode(&seq, n)));
        let mut i = 0;
        loop {
            if i == len {
                return classes;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Unlabeled tree counts for orders `0..=n_max` by Otter's formula.
pub fn otter_counts(n_max: usize) -> Vec<u64> {
    // Rooted trees: r(n+1) = (1/n) sum_{k=1..n} (sum_{d | k} d r(d)) r(n-k+1).
    let mut r = vec![0u64; n_max + 1];
    if n_max >= 1 {
        r[1] = 1;
    }
    for m in 1..n_max {
        let mut total: u64 = 0;
        for k in 1..=m {
            let s: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * r[d]).sum();
            total += s * r[m - k + 1];
        }
        r[m + 1] = total / m as u64;
    }
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                return 1;
            }
            let pairs: u64 = (1..n).map(|i| r[i] * r[n - i]).sum();
            let even = if n % 2 == 0 { r[n / 2] } else { 0 };
            r[n] - (pairs - even) / 2
        })
        .collect()
}

/// Number of partitions of `m`.
pub fn partitions(m: usize) -> usize {
    let mut p = vec![0usize; m + 1];
    p[0] = 1;
    for part in 1..=m {
        for total in part..=m {
            p[total] += p[total - part];
        }
    }
    p[m]
}

#[test]
fn oracles_self_check() {
    // Known free-tree counts.
    assert_eq!(&otter_counts(10)[1..], &[1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    assert_eq!(prufer_classes(6).len(), 6);
    assert_eq!(partitions(6), 11);
    assert!((abc_oracle(&Tree::star(5)) - 12f64.sqrt()).abs() < 1e-12);
}
