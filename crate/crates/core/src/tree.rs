//! Undirected trees on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected tree with sorted adjacency lists and cached degrees.
///
/// Values are immutable once built; edits go through [`TreeEditor`] or
/// [`TreeBuilder`], both of which validate tree-ness when they finish.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl Tree {
    /// The tree with one vertex and no edges.
    pub fn single() -> Self {
        Tree {
            adj: vec![Vec::new()],
            degrees: vec![0],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "expected {} edges for {} vertices, got {}",
                n - 1,
                n,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidTree(format!("edge ({u}, {v}) out of range 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Self::from_adjacency(adj)
    }

    /// Builds a tree from a parent array: `parents[i]` is the parent of
    /// vertex `i + 1` and must be smaller than `i + 1`.
    pub fn from_parents(parents: &[usize]) -> Result<Self> {
        let n = parents.len() + 1;
        let mut edges = Vec::with_capacity(parents.len());
        for (i, &p) in parents.iter().enumerate() {
            let child = i + 1;
            if p >= child {
                return Err(Error::InvalidTree(format!(
                    "parent {p} of vertex {child} must precede it"
                )));
            }
            edges.push((p, child));
        }
        Self::from_edges(n, &edges)
    }

    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidTree(format!("duplicate edge at vertex {v}")));
            }
            if list.contains(&v) {
                return Err(Error::InvalidTree(format!("self-loop at {v}")));
            }
        }
        let degrees = adj.iter().map(Vec::len).collect();
        let tree = Tree { adj, degrees };
        tree.check_invariants()?;
        Ok(tree)
    }

    pub fn path(n: usize) -> Self {
        assert!(n >= 1, "path needs at least one vertex");
        let parents: Vec<usize> = (0..n - 1).collect();
        Self::from_parents(&parents).expect("path is a tree")
    }

    /// Star with one center (vertex 0) and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1, "star needs at least one vertex");
        Self::from_parents(&vec![0; n - 1]).expect("star is a tree")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    #[inline]
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.degrees[v] == 1)
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Audit path: recomputes every structural invariant from scratch.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(Error::InvalidTree("empty vertex set".into()));
        }
        let mut edge_ends = 0usize;
        for (v, list) in self.adj.iter().enumerate() {
            if self.degrees[v] != list.len() {
                return Err(Error::InvalidTree(format!("stale degree at vertex {v}")));
            }
            for &w in list {
                if w >= n || w == v || self.adj[w].binary_search(&v).is_err() {
                    return Err(Error::InvalidTree(format!("asymmetric adjacency {v}-{w}")));
                }
            }
            edge_ends += list.len();
        }
        if edge_ends != 2 * (n - 1) {
            return Err(Error::InvalidTree(format!("{} edges on {} vertices", edge_ends / 2, n)));
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != n {
            return Err(Error::InvalidTree("graph is disconnected".into()));
        }
        Ok(())
    }

    /// Applies `perm` (old id -> new id) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n() {
            return Err(Error::Domain("permutation length differs from n".into()));
        }
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.n(), &edges)
    }

    pub fn rooted(&self, root: usize) -> Rooted<'_> {
        Rooted::new(self, root)
    }

    /// Parent-array encoding after relabelling vertices in BFS order from
    /// vertex 0 (children visited in increasing id order).
    pub fn to_parent_array(&self) -> Vec<usize> {
        let rooted = self.rooted(0);
        let mut new_id = vec![0usize; self.n()];
        for (i, &v) in rooted.order().iter().enumerate() {
            new_id[v] = i;
        }
        rooted.order()[1..]
            .iter()
            .map(|&v| new_id[rooted.parent(v).expect("non-root")])
            .collect()
    }

    pub(crate) fn into_adjacency(self) -> Vec<Vec<usize>> {
        self.adj
    }
}

/// A tree viewed from a chosen root: parents, children and BFS order.
#[derive(Clone, Debug)]
pub struct Rooted<'a> {
    tree: &'a Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    order: Vec<usize>,
}

impl<'a> Rooted<'a> {
    fn new(tree: &'a Tree, root: usize) -> Self {
        let n = tree.n();
        assert!(root < n, "root {root} out of range");
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in tree.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        Rooted {
            tree,
            root,
            parent,
            depth,
            order,
        }
    }

    pub fn tree(&self) -> &'a Tree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Vertices in BFS order (children in increasing id order).
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.parent[v];
        self.tree.neighbors(v).iter().copied().filter(move |&w| Some(w) != p)
    }

    pub fn child_count(&self, v: usize) -> usize {
        self.tree.degree(v) - usize::from(self.parent[v].is_some())
    }
}

/// Edge-level editing of an existing tree. Intermediate states may be
/// forests; [`TreeEditor::finish`] validates the result.
#[derive(Clone, Debug)]
pub struct TreeEditor {
    adj: Vec<Vec<usize>>,
}

impl TreeEditor {
    pub fn new(tree: Tree) -> Self {
        TreeEditor {
            adj: tree.into_adjacency(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (Ok(iu), Ok(iv)) = (self.adj[u].binary_search(&v), self.adj[v].binary_search(&u)) else {
            return Err(Error::Precondition(format!("edge {u}-{v} not present")));
        };
        self.adj[u].remove(iu);
        self.adj[v].remove(iv);
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::Precondition(format!("self-loop at {u}")));
        }
        match (self.adj[u].binary_search(&v), self.adj[v].binary_search(&u)) {
            (Err(iu), Err(iv)) => {
                self.adj[u].insert(iu, v);
                self.adj[v].insert(iv, u);
                Ok(())
            }
            _ => Err(Error::Precondition(format!("edge {u}-{v} already present"))),
        }
    }

    /// Moves the edge `child-from` to `child-to`.
    pub fn reattach(&mut self, child: usize, from: usize, to: usize) -> Result<()> {
        self.remove_edge(child, from)?;
        self.add_edge(child, to)
    }

    pub fn finish(self) -> Result<Tree> {
        Tree::from_adjacency(self.adj)
    }
}

/// Grows a rooted tree vertex by vertex; vertex 0 is the root.
#[derive(Clone, Debug)]
pub struct TreeBuilder {
    parents: Vec<usize>,
}

impl Default for TreeBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl TreeBuilder {
    pub fn new() -> Self {
        TreeBuilder { parents: Vec::new() }
    }

    pub const ROOT: usize = 0;

    pub fn len(&self) -> usize {
        self.parents.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of children added below `v` so far.
    pub fn children_of(&self, v: usize) -> usize {
        self.parents.iter().filter(|&&p| p == v).count()
    }

    /// Adds a new vertex below `parent` and returns its id.
    pub fn child(&mut self, parent: usize) -> usize {
        assert!(parent < self.len(), "unknown parent {parent}");
        self.parents.push(parent);
        self.parents.len()
    }

    /// Hangs a path of `len` new vertices below `parent`; returns the first.
    pub fn arm(&mut self, parent: usize, len: usize) -> usize {
        assert!(len >= 1);
        let first = self.child(parent);
        let mut last = first;
        for _ in 1..len {
            last = self.child(last);
        }
        first
    }

    /// Adds a vertex below `parent` carrying `k` pendant paths of length 2,
    /// i.e. the center of a `B_k`-branch (or a `B_1` center when `k = 1`,
    /// in which case the center itself is the degree-2 vertex).
    pub fn b_branch(&mut self, parent: usize, k: usize) -> usize {
        if k == 1 {
            return self.arm(parent, 2);
        }
        let center = self.child(parent);
        for _ in 0..k {
            self.arm(center, 2);
        }
        center
    }

    pub fn build(&self) -> Tree {
        Tree::from_parents(&self.parents).expect("builder output is a tree")
    }
}

/// A degree sequence: positive integers in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `values` into non-increasing order. Zero entries are only
    /// accepted as the single-vertex sequence `(0)`.
    pub fn new(mut values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("empty degree sequence".into()));
        }
        if values.len() > 1 && values.contains(&0) {
            return Err(Error::Domain("degrees must be positive".into()));
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad degree {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(values)
    }
}
