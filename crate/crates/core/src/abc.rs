//! The atom-bond connectivity index and degree bookkeeping.

use crate::error::{Error, Result};
use crate::tree::{DegreeSequence, Tree};

/// Weight of an edge whose endpoints have degrees `x` and `y`:
/// `sqrt((x + y - 2) / (x y))`.
pub fn edge_contribution(x: usize, y: usize) -> Result<f64> {
    if x == 0 || y == 0 {
        return Err(Error::Domain(format!("degrees must be positive, got ({x}, {y})")));
    }
    Ok(edge_weight(x, y))
}

/// Unchecked [`edge_contribution`] for hot loops; callers guarantee
/// positive degrees.
#[inline]
pub fn edge_weight(x: usize, y: usize) -> f64 {
    let (x, y) = (x as f64, y as f64);
    ((x + y - 2.0) / (x * y)).sqrt()
}

pub fn abc_index(t: &Tree) -> f64 {
    t.edges()
        .into_iter()
        .map(|(u, v)| edge_weight(t.degree(u), t.degree(v)))
        .sum()
}

/// Precomputed edge weights for degrees up to a bound, used by the
/// enumeration searches where the same few weights are summed millions of
/// times.
#[derive(Clone, Debug)]
pub struct WeightTable {
    stride: usize,
    values: Vec<f64>,
}

impl WeightTable {
    pub fn new(max_degree: usize) -> Self {
        let stride = max_degree + 1;
        let mut values = vec![0.0; stride * stride];
        for x in 1..stride {
            for y in 1..stride {
                values[x * stride + y] = edge_weight(x, y);
            }
        }
        WeightTable { stride, values }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.values[x * self.stride + y]
    }

    /// Index of the tree encoded by a parent array (`parents[i]` is the
    /// parent of vertex `i + 1`), using `degrees` as scratch space.
    pub fn index_of_parents<P: Copy + Into<usize>>(&self, parents: &[P], degrees: &mut Vec<usize>) -> f64 {
        let n = parents.len() + 1;
        degrees.clear();
        degrees.resize(n, 1);
        degrees[0] = 0;
        for &p in parents {
            degrees[p.into()] += 1;
        }
        parents
            .iter()
            .enumerate()
            .map(|(i, &p)| self.get(degrees[i + 1], degrees[p.into()]))
            .sum()
    }
}

pub fn degree_sequence(t: &Tree) -> DegreeSequence {
    DegreeSequence::new(t.degrees().to_vec()).expect("tree degrees are positive or the singleton")
}

/// True iff the sequence has at least two entries, all positive, summing to
/// `2(n - 1)`.
pub fn is_tree_degree_sequence(d: &DegreeSequence) -> bool {
    let n = d.len();
    n >= 2 && d.values().iter().all(|&x| x >= 1) && d.sum() == 2 * (n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn closed_form_edges() {
        assert_eq!(edge_contribution(1, 1).unwrap(), 0.0);
        assert!((edge_contribution(2, 2).unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((edge_contribution(3, 3).unwrap() - 0.6666666666666666).abs() < 1e-15);
        assert!((edge_contribution(1, 4).unwrap() - 0.8660254037844386).abs() < 1e-15);
        assert!(edge_contribution(0, 3).is_err());
    }

    #[test]
    fn small_trees() {
        assert_eq!(abc_index(&Tree::path(2)), 0.0);
        assert_eq!(abc_index(&Tree::single()), 0.0);
        assert!((abc_index(&Tree::star(5)) - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        assert!((abc_index(&Tree::path(5)) - 2.0 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(degree_sequence(&Tree::star(5)).values(), &[4, 1, 1, 1, 1]);
        assert_eq!(degree_sequence(&Tree::path(4)).values(), &[2, 2, 1, 1]);
        assert_eq!(degree_sequence(&Tree::single()).values(), &[0]);
        let ok = |s: &str| is_tree_degree_sequence(&s.parse().unwrap());
        assert!(ok("2,1,1"));
        assert!(ok("3,3,1,1,1,1"));
        assert!(!ok("3,1,1"));
        assert!(!ok("0"));
    }

    #[test]
    fn table_matches_direct_sum() {
        let t = Tree::from_parents(&[0, 0, 1, 1, 1, 2, 6, 6]).unwrap();
        let table = WeightTable::new(t.n());
        let mut scratch = Vec::new();
        let fast = table.index_of_parents(&t.to_parent_array(), &mut scratch);
        assert!((fast - abc_index(&t)).abs() < 1e-12);
    }

    #[test]
    fn symmetry_spot_grid() {
        let grid = [1usize, 2, 3, 7, 10, 99, 1000, 65_537, 999_999, 1_000_000];
        for &x in &grid {
            for &y in &grid {
                assert_eq!(edge_weight(x, y), edge_weight(y, x));
                let w = edge_weight(x, y);
                assert!((0.0..=1.0).contains(&w));
            }
        }
    }

    fn random_tree(n: usize, seed: u64) -> Tree {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
        Tree::from_parents(&parents).unwrap()
    }

    proptest! {
        #[test]
        fn relabelling_preserves_index(n in 2usize..40, seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let t = random_tree(n, seed);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
            let r = t.relabel(&perm).unwrap();
            prop_assert!((abc_index(&t) - abc_index(&r)).abs() < 1e-12);
        }

        #[test]
        fn index_within_edge_count(n in 1usize..60, seed in any::<u64>()) {
            let t = random_tree(n, seed);
            let a = abc_index(&t);
            prop_assert!(a >= 0.0);
            prop_assert!(a <= (n - 1) as f64 + 1e-12);
        }

        // Smoothing a degree-2 vertex away and recomputing agrees with
        // patching only the edges around it.
        #[test]
        fn contraction_matches_recomputation(n in 4usize..40, seed in any::<u64>()) {
            let t = random_tree(n, seed);
            let Some(w) = (0..n).find(|&v| t.degree(v) == 2) else { return Ok(()); };
            let (a, b) = (t.neighbors(w)[0], t.neighbors(w)[1]);
            let mut edges: Vec<(usize, usize)> = t
                .edges()
                .into_iter()
                .filter(|&(x, y)| x != w && y != w)
                .collect();
            edges.push((a, b));
            let relabel = |v: usize| if v > w { v - 1 } else { v };
            let edges: Vec<_> = edges.into_iter().map(|(x, y)| (relabel(x), relabel(y))).collect();
            let smaller = Tree::from_edges(n - 1, &edges).unwrap();
            let patched = abc_index(&t) - edge_weight(2, t.degree(a)) - edge_weight(2, t.degree(b))
                + edge_weight(t.degree(a), t.degree(b));
            prop_assert!((abc_index(&smaller) - patched).abs() < 1e-9);
        }
    }
}
