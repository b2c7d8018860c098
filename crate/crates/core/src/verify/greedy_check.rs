use std::collections::BTreeMap;

use serde::Serialize;

use super::EPSILON;
use crate::abc::{abc_index, degree_sequence};
use crate::enumerate::{enumerate_trees, tree_degree_sequences};
use crate::error::{Error, Result};
use crate::greedy::build_greedy_tree;
use crate::tree::DegreeSequence;

/// Largest order the greedy minimality check enumerates.
pub const THM1_N_MAX: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct GreedyMismatch {
    pub sequence: DegreeSequence,
    pub greedy_abc: f64,
    pub min_abc: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GreedyCheck {
    pub n_max: usize,
    /// Number of degree sequences checked per order, from 2 up.
    pub sequences_per_n: Vec<(usize, usize)>,
    pub mismatches: Vec<GreedyMismatch>,
}

impl GreedyCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn sequences_checked(&self) -> usize {
        self.sequences_per_n.iter().map(|x| x.1).sum()
    }
}

/// For every tree degree sequence of order `2..=n_max`, compares the greedy
/// tree with the minimum over all trees of that sequence. The minima come
/// from a full enumeration grouped by degree sequence, so every
/// realization is seen.
pub fn verify_thm1(n_max: usize) -> Result<GreedyCheck> {
    if n_max > THM1_N_MAX {
        return Err(Error::Budget(format!(
            "greedy check is limited to n <= {THM1_N_MAX}, got {n_max}"
        )));
    }
    let mut check = GreedyCheck {
        n_max,
        sequences_per_n: Vec::new(),
        mismatches: Vec::new(),
    };
    for n in 2..=n_max {
        let mut minima: BTreeMap<DegreeSequence, f64> = BTreeMap::new();
        for t in enumerate_trees(n)? {
            let value = abc_index(&t);
            minima
                .entry(degree_sequence(&t))
                .and_modify(|m| *m = m.min(value))
                .or_insert(value);
        }
        let sequences = tree_degree_sequences(n);
        if sequences.len() != minima.len() {
            return Err(Error::Domain(format!(
                "n = {n}: {} degree sequences listed but {} realized",
                sequences.len(),
                minima.len()
            )));
        }
        for d in &sequences {
            let min_abc = *minima
                .get(d)
                .ok_or_else(|| Error::Domain(format!("{d} listed but never realized")))?;
            let greedy_abc = abc_index(&build_greedy_tree(d)?.tree);
            if greedy_abc > min_abc + EPSILON {
                check.mismatches.push(GreedyMismatch {
                    sequence: d.clone(),
                    greedy_abc,
                    min_abc,
                });
            }
        }
        check.sequences_per_n.push((n, sequences.len()));
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn greedy_is_minimal_up_to_nine() {
        let c = verify_thm1(9).unwrap();
        assert!(c.passed(), "{:?}", c.mismatches);
        let at = |n| c.sequences_per_n.iter().find(|x| x.0 == n).unwrap().1;
        // Partitions of n - 2.
        assert_eq!([at(5), at(8), at(9)], [3, 11, 15]);
    }

    #[test]
    fn refuses_large_orders() {
        assert!(matches!(verify_thm1(13), Err(Error::Budget(_))));
    }
}
