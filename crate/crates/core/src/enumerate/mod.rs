//! Isomorph-free enumeration of trees.
//!
//! [`enumerate_trees`] streams one representative per isomorphism class in
//! the generator's order: level sequences in decreasing lexicographic
//! order, from the path down to the star. [`par_trees`] hands out the same
//! trees to a rayon pool in chunks, so only the multiset is preserved.

mod canon;
mod degseq;
mod free;

use rayon::iter::{ParallelBridge, ParallelIterator};

pub use canon::{canonical_code, centroids, rooted_code, CanonicalCode};
pub use degseq::{enumerate_trees_with_degree_sequence, filter_trees_with_degree_sequence, tree_degree_sequences};
pub use free::FreeTreeGenerator;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Sequential stream of trees on `n` vertices, one per isomorphism class.
pub fn enumerate_trees(n: usize) -> Result<Trees> {
    if n == 0 {
        return Err(Error::Domain("tree order must be at least 1".into()));
    }
    Ok(Trees {
        generator: FreeTreeGenerator::new(n),
        scratch: Vec::with_capacity(n),
    })
}

pub struct Trees {
    generator: FreeTreeGenerator,
    scratch: Vec<usize>,
}

impl Trees {
    pub fn generator(&self) -> &FreeTreeGenerator {
        &self.generator
    }
}

impl Iterator for Trees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if !self.generator.advance() {
            return None;
        }
        self.generator.write_parents(&mut self.scratch);
        Some(Tree::from_parents(&self.scratch).expect("generator emits trees"))
    }
}

/// Parent arrays of the generator output, batched `chunk` at a time.
pub fn parent_chunks(generator: FreeTreeGenerator, chunk: usize) -> impl Iterator<Item = Vec<Vec<usize>>> {
    let mut generator = generator;
    let chunk = chunk.max(1);
    std::iter::from_fn(move || {
        let mut batch = Vec::with_capacity(chunk);
        while batch.len() < chunk && generator.advance() {
            let mut parents = Vec::new();
            generator.write_parents(&mut parents);
            batch.push(parents);
        }
        (!batch.is_empty()).then_some(batch)
    })
}

/// Parallel counterpart of [`enumerate_trees`]; yields the same trees in
/// no particular order.
pub fn par_trees(n: usize) -> Result<impl ParallelIterator<Item = Tree>> {
    if n == 0 {
        return Err(Error::Domain("tree order must be at least 1".into()));
    }
    Ok(parent_chunks(FreeTreeGenerator::new(n), 1024)
        .par_bridge()
        .flat_map_iter(|batch| {
            batch
                .into_iter()
                .map(|p| Tree::from_parents(&p).expect("generator emits trees"))
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn rejects_zero() {
        assert!(enumerate_trees(0).is_err());
        assert!(par_trees(0).is_err());
    }

    #[test]
    fn n_equals_four_gives_path_and_star() {
        let codes: HashSet<_> = enumerate_trees(4).unwrap().map(|t| canonical_code(&t)).collect();
        assert_eq!(codes.len(), 2);
        assert!(codes.contains(&canonical_code(&Tree::path(4))));
        assert!(codes.contains(&canonical_code(&Tree::star(4))));
    }

    #[test]
    fn first_is_path_last_is_star() {
        let all: Vec<_> = enumerate_trees(9).unwrap().collect();
        assert_eq!(canonical_code(&all[0]), canonical_code(&Tree::path(9)));
        assert_eq!(canonical_code(all.last().unwrap()), canonical_code(&Tree::star(9)));
    }

    #[test]
    fn parallel_matches_sequential() {
        for n in [1, 2, 3, 8, 13] {
            let mut seq: Vec<_> = enumerate_trees(n).unwrap().map(|t| canonical_code(&t)).collect();
            let mut par: Vec<_> = par_trees(n).unwrap().map(|t| canonical_code(&t)).collect();
            seq.sort();
            par.sort();
            assert_eq!(seq, par, "n = {n}");
        }
    }
}
