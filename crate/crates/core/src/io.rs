//! Text encodings of trees.
//!
//! Edge list: the first line holds `n`, followed by `n - 1` lines `u v`
//! with 0-based ids. Parent array: the first line holds `n`, followed by
//! `n - 1` integers `p_1 .. p_{n-1}` with `p_i < i`. Both formats are
//! whitespace tolerant, so [`parse_tree`] tells them apart by token count.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Edges,
    Parents,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(Format::Edges),
            "parents" => Ok(Format::Parents),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

fn tokens(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad integer {tok:?}: {e}")))
        })
        .collect()
}

/// Parses either format, deciding by the number of integers present.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let toks = tokens(text)?;
    let Some((&n, rest)) = toks.split_first() else {
        return Err(Error::Parse("empty input".into()));
    };
    if n == 0 {
        return Err(Error::Parse("n must be at least 1".into()));
    }
    if n == 1 && rest.is_empty() {
        return Ok(Tree::single());
    }
    if rest.len() == 2 * (n - 1) {
        let edges: Vec<_> = rest.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        Tree::from_edges(n, &edges)
    } else if rest.len() == n - 1 {
        Tree::from_parents(rest)
    } else {
        Err(Error::Parse(format!(
            "n = {n} needs {} (edge list) or {} (parent array) integers after the header, found {}",
            2 * (n - 1),
            n - 1,
            rest.len()
        )))
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    use std::io::Write as _;
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

pub fn read_tree(path: &Path) -> Result<Tree> {
    parse_tree(&std::fs::read_to_string(path)?)
}

/// Canonical edge-list output: edges sorted lexicographically with `u < v`.
pub fn write_edges(t: &Tree) -> String {
    let mut out = format!("{}\n", t.n());
    for (u, v) in t.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_parents(t: &Tree) -> String {
    let parents: Vec<String> = t.to_parent_array().iter().map(ToString::to_string).collect();
    if parents.is_empty() {
        format!("{}\n", t.n())
    } else {
        format!("{}\n{}\n", t.n(), parents.join(" "))
    }
}

pub fn write_tree(t: &Tree, format: Format) -> String {
    match format {
        Format::Edges => write_edges(t),
        Format::Parents => write_parents(t),
    }
}
