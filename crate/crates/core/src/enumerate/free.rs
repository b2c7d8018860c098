//! Constant amortized time generation of unlabelled free trees.
//!
//! Trees are represented by level sequences rooted at a center, with the
//! root at level 1 and the parent array maintained alongside. The successor
//! function walks the canonical level sequences in decreasing lexicographic
//! order, starting at the path and ending at the star, and skips every
//! rooted tree that is not the canonical representative of its free tree.
//! Each call does O(1) amortized work.

use serde::{Deserialize, Serialize};

const INF: usize = usize::MAX;

/// Resumable generator state. `level[i]` and `parent[i]` are 1-based; index
/// 0 is a sentinel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeTreeGenerator {
    n: usize,
    level: Vec<usize>,
    parent: Vec<usize>,
    p: usize,
    q: usize,
    h1: usize,
    h2: usize,
    c: usize,
    r: usize,
    /// Whether the current sequence has already been handed out.
    emitted: bool,
    done: bool,
}

impl FreeTreeGenerator {
    /// Panics if `n == 0`; use [`crate::enumerate::enumerate_trees`] for a
    /// checked entry point.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "free trees need at least one vertex");
        let mut level = vec![0; n + 1];
        let mut parent = vec![0; n + 1];
        if n <= 3 {
            // Single vertex, edge and path: one tree each, emitted directly.
            for i in 1..=n {
                level[i] = i.min(2);
                parent[i] = usize::from(i > 1);
            }
            if n == 3 {
                level[3] = 2;
                parent[3] = 1;
            }
            return FreeTreeGenerator {
                n,
                level,
                parent,
                p: 0,
                q: 0,
                h1: 0,
                h2: 0,
                c: INF,
                r: 0,
                emitted: false,
                done: false,
            };
        }
        let k = n / 2 + 1;
        for i in 1..=k {
            level[i] = i;
            parent[i] = i - 1;
        }
        for i in k + 1..=n {
            level[i] = i - k + 1;
            parent[i] = i - 1;
        }
        parent[k + 1] = 1;
        FreeTreeGenerator {
            n,
            level,
            parent,
            p: if n == 4 { 3 } else { n },
            q: n - 1,
            h1: k,
            h2: n,
            c: if n % 2 == 0 { n + 1 } else { INF },
            r: k,
            emitted: false,
            done: false,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Level sequence of the current tree, root first at level 1.
    pub fn levels(&self) -> &[usize] {
        &self.level[1..]
    }

    /// Writes the current tree as a 0-based parent array
    /// (`out[i]` is the parent of vertex `i + 1`).
    pub fn write_parents(&self, out: &mut Vec<usize>) {
        out.clear();
        out.extend(self.parent[2..].iter().map(|&p| p - 1));
    }

    /// Moves to the next tree; returns `false` once the sequence is
    /// exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.emitted {
            self.emitted = true;
            return true;
        }
        if self.n <= 3 || self.q == 0 {
            self.done = true;
            return false;
        }
        self.step();
        true
    }

    fn step(&mut self) {
        let n = self.n;
        let l = &mut self.level;
        let w = &mut self.parent;
        let mut fixit = false;

        let h_gap = n as isize - self.h2 as isize;
        let r_gap = self.r as isize - self.h1 as isize;
        if self.c == n + 1
            || (self.p == self.h2
                && ((l[self.h1] == l[self.h2] + 1 && h_gap > r_gap) || (l[self.h1] == l[self.h2] && h_gap + 1 < r_gap)))
        {
            if l[self.r] > 3 {
                self.p = self.r;
                self.q = w[self.r];
                if self.h1 == self.r {
                    self.h1 -= 1;
                }
                fixit = true;
            } else {
                self.p = self.r;
                self.r -= 1;
                self.q = 2;
            }
        }

        let mut need_r = false;
        let mut need_c = false;
        let mut need_h2 = false;
        if self.p <= self.h1 {
            self.h1 = self.p - 1;
        }
        if self.p <= self.r {
            need_r = true;
        } else if self.p <= self.h2 {
            need_h2 = true;
        } else if l[self.h2] + 1 == l[self.h1] && n - self.h2 == self.r - self.h1 {
            if self.p <= self.c {
                need_c = true;
            }
        } else {
            self.c = INF;
        }

        let old_p = self.p;
        let shift = old_p - self.q;
        let old_lq = l[self.q];
        let old_wq = w[self.q];
        self.p = INF;

        for i in old_p..=n {
            l[i] = l[i - shift];
            if l[i] == 2 {
                w[i] = 1;
            } else {
                self.p = i;
                self.q = if l[i] == old_lq { old_wq } else { w[i - shift] + shift };
                w[i] = self.q;
            }
            if need_r && l[i] == 2 {
                need_r = false;
                need_h2 = true;
                self.r = i - 1;
            }
            if need_h2 && l[i] <= l[i - 1] && i > self.r + 1 {
                need_h2 = false;
                self.h2 = i - 1;
                if l[self.h2] + 1 == l[self.h1] && n - self.h2 == self.r - self.h1 {
                    need_c = true;
                } else {
                    self.c = INF;
                }
            }
            if need_c {
                if l[i] + 1 != l[self.h1 + i - self.h2] {
                    need_c = false;
                    self.c = i;
                } else {
                    self.c = i + 1;
                }
            }
        }

        if fixit {
            self.r = n - self.h1 + 1;
            for i in self.r + 1..=n {
                l[i] = i - self.r + 1;
                w[i] = i - 1;
            }
            if self.r < n {
                w[self.r + 1] = 1;
            }
            self.h2 = n;
            self.p = n;
            self.q = self.p - 1;
            self.c = INF;
        } else {
            if self.p == INF {
                self.p = if l[old_p - 1] != 2 { old_p - 1 } else { old_p - 2 };
                self.q = w[self.p];
            }
            if need_h2 {
                self.h2 = n;
                self.c = if l[self.h2] + 1 == l[self.h1] && self.h1 == self.r {
                    n + 1
                } else {
                    INF
                };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize) -> usize {
        let mut g = FreeTreeGenerator::new(n);
        let mut k = 0;
        while g.advance() {
            k += 1;
        }
        k
    }

    #[test]
    fn small_counts() {
        let expected = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (n, &e) in expected.iter().enumerate().skip(1) {
            assert_eq!(count(n), e, "n = {n}");
        }
    }

    #[test]
    fn sequences_decrease_lexicographically() {
        for n in 4..=12 {
            let mut g = FreeTreeGenerator::new(n);
            let mut prev: Option<Vec<usize>> = None;
            while g.advance() {
                let cur = g.levels().to_vec();
                if let Some(p) = &prev {
                    assert!(cur < *p, "n = {n}: {cur:?} !< {p:?}");
                }
                prev = Some(cur);
            }
        }
    }

    #[test]
    fn resumes_from_serialized_state() {
        let mut g = FreeTreeGenerator::new(11);
        for _ in 0..40 {
            g.advance();
        }
        let saved = serde_json::to_string(&g).unwrap();
        let mut resumed: FreeTreeGenerator = serde_json::from_str(&saved).unwrap();
        while g.advance() {
            assert!(resumed.advance());
            assert_eq!(g.levels(), resumed.levels());
        }
        assert!(!resumed.advance());
    }
}
