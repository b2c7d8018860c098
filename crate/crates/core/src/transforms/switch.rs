use serde::Serialize;

use crate::abc::abc_index;
use crate::error::{Error, Result};
use crate::tree::{Tree, TreeEditor};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SwitchReport {
    pub uv: (usize, usize),
    pub xy: (usize, usize),
    pub structural_delta: f64,
    /// `d(u) >= d(x)` and `d(v) <= d(y)`.
    pub condition_holds: bool,
    /// `d(u) = d(x)` or `d(v) = d(y)`.
    pub equality_expected: bool,
}

/// Replaces the edges `uv` and `xy` by `uy` and `xv`.
pub fn switch(t: &Tree, uv: (usize, usize), xy: (usize, usize)) -> Result<(Tree, SwitchReport)> {
    let ((u, v), (x, y)) = (uv, xy);
    let n = t.n();
    if [u, v, x, y].iter().any(|&a| a >= n) {
        return Err(Error::Precondition(format!("vertex out of range 0..{n}")));
    }
    if !t.has_edge(u, v) || !t.has_edge(x, y) {
        return Err(Error::Precondition("uv and xy must be edges".into()));
    }
    if u == y || x == v || t.has_edge(u, y) || t.has_edge(x, v) {
        return Err(Error::Precondition("uy and xv must be non-edges".into()));
    }
    let mut ed = TreeEditor::new(t.clone());
    ed.remove_edge(u, v)?;
    ed.remove_edge(x, y)?;
    ed.add_edge(u, y)?;
    ed.add_edge(x, v)?;
    let after = ed.finish().map_err(|_| {
        Error::Precondition(format!(
            "switching {u}-{v}, {x}-{y} to {u}-{y}, {x}-{v} does not give a tree"
        ))
    })?;
    let (du, dv, dx, dy) = (t.degree(u), t.degree(v), t.degree(x), t.degree(y));
    let report = SwitchReport {
        uv,
        xy,
        structural_delta: abc_index(&after) - abc_index(t),
        condition_holds: du >= dx && dv <= dy,
        equality_expected: du == dx || dv == dy,
    };
    Ok((after, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn caterpillar_switch_decreases() {
        let t = Tree::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (4, 6), (5, 7)]).unwrap();
        let (after, r) = switch(&t, (0, 1), (4, 5)).unwrap();
        assert_eq!([t.degree(0), t.degree(4), t.degree(1), t.degree(5)], [4, 3, 1, 2]);
        assert!(r.condition_holds && !r.equality_expected);
        assert!(r.structural_delta < 0.0);
        assert_eq!(after.n(), 8);
    }

    #[test]
    fn equal_degrees_give_zero() {
        // u = 0 and x = 4 both have degree 3
        let t = Tree::from_edges(8, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let (_, r) = switch(&t, (0, 1), (4, 6)).unwrap();
        assert!(r.equality_expected);
        assert!(r.structural_delta.abs() < 1e-12);
    }

    #[test]
    fn disconnecting_switch_is_rejected() {
        // On 0-1-2-3-4, trading 0-1 and 3-4 for 0-4 and 3-1 closes 1-2-3.
        let t = Tree::path(5);
        let err = switch(&t, (0, 1), (3, 4)).unwrap_err().to_string();
        assert!(err.contains("does not give a tree"), "{err}");
        assert!(switch(&t, (1, 0), (3, 4)).is_ok());
        assert!(switch(&t, (0, 1), (1, 2)).is_err());
    }

    fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Tree {
        let parents: Vec<usize> = (1..n).map(|i| rng.gen_range(0..i)).collect();
        Tree::from_parents(&parents).unwrap()
    }

    #[test]
    fn random_switches_follow_the_degree_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        for _ in 0..200 {
            let n = rng.gen_range(6..=30);
            let t = random_tree(&mut rng, n);
            let mut edges = t.edges();
            edges.shuffle(&mut rng);
            for pair in edges.windows(2).take(20) {
                let (a, b) = (pair[0], pair[1]);
                for (uv, xy) in [(a, b), ((a.1, a.0), b), (a, (b.1, b.0)), ((a.1, a.0), (b.1, b.0))] {
                    let Ok((_, r)) = switch(&t, uv, xy) else { continue };
                    if !r.condition_holds {
                        continue;
                    }
                    checked += 1;
                    if r.equality_expected {
                        assert!(r.structural_delta.abs() < 1e-12, "{r:?}");
                    } else {
                        assert!(r.structural_delta < -1e-12, "{r:?}");
                    }
                }
            }
        }
        assert!(checked > 1000);
    }
}
