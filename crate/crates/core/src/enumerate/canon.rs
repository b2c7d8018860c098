//! Canonical codes for free trees (AHU encoding rooted at the centroid).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Balanced-parenthesis encoding of a tree rooted at its centroid, with
/// `1` opening and `0` closing a vertex and children in sorted order. Two
/// trees share a code iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    /// Rebuilds a representative tree: vertices are numbered in preorder of
    /// the encoding, so vertex 0 is the centroid.
    pub fn to_tree(&self) -> Result<Tree> {
        let mut parents = Vec::with_capacity(self.order().saturating_sub(1));
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0usize;
        for (i, &b) in self.0.iter().enumerate() {
            match b {
                1 => {
                    if let Some(&p) = stack.last() {
                        parents.push(p);
                    } else if next > 0 {
                        return Err(Error::Parse(format!("second root at position {i}")));
                    }
                    stack.push(next);
                    next += 1;
                }
                0 => {
                    stack
                        .pop()
                        .ok_or_else(|| Error::Parse(format!("unbalanced code at position {i}")))?;
                }
                _ => return Err(Error::Parse(format!("invalid symbol at position {i}"))),
            }
        }
        if !stack.is_empty() || next == 0 {
            return Err(Error::Parse("unbalanced code".into()));
        }
        Tree::from_parents(&parents)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s
            .bytes()
            .map(|c| match c {
                b'1' => Ok(1),
                b'0' => Ok(0),
                _ => Err(Error::Parse(format!("unexpected {:?} in canonical code", c as char))),
            })
            .collect::<Result<Vec<u8>>>()?;
        let code = CanonicalCode(bytes);
        code.to_tree()?;
        Ok(code)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One or two centroids of `t`, in increasing id order.
pub fn centroids(t: &Tree) -> Vec<usize> {
    let n = t.n();
    let rooted = t.rooted(0);
    let mut size = vec![1usize; n];
    for &v in rooted.order().iter().rev() {
        if let Some(p) = rooted.parent(v) {
            size[p] += size[v];
        }
    }
    let mut out = Vec::with_capacity(2);
    for v in 0..n {
        let mut heaviest = n - size[v];
        for c in rooted.children(v) {
            heaviest = heaviest.max(size[c]);
        }
        if 2 * heaviest <= n {
            out.push(v);
        }
    }
    out
}

/// AHU code of `t` rooted at `root`.
pub fn rooted_code(t: &Tree, root: usize) -> Vec<u8> {
    let rooted = t.rooted(root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); t.n()];
    for &v in rooted.order().iter().rev() {
        let mut kids: Vec<Vec<u8>> = rooted.children(v).map(|c| std::mem::take(&mut codes[c])).collect();
        kids.sort_unstable();
        let len = 2 + kids.iter().map(Vec::len).sum::<usize>();
        let mut code = Vec::with_capacity(len);
        code.push(1);
        for k in kids {
            code.extend_from_slice(&k);
        }
        code.push(0);
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = centroids(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("every tree has a centroid");
    CanonicalCode(code)
}
