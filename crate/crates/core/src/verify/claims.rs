use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::MinimizerRecord;
use crate::branches::{
    bfs_degree_order_violations, classify_branches, decompose_paths, max_degree_roots, path_degree_ordering_violations,
    BranchProfile,
};
use crate::enumerate::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::tree::Tree;

/// Smallest order the structural claims are stated for.
pub const STRUCTURE_N_MIN: usize = 10;
/// The B2 / length-3 exclusion is only claimed above this order.
pub const THM8_N_MIN: usize = 19;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Claim {
    #[serde(rename = "THM2")]
    Thm2,
    #[serde(rename = "THM3")]
    Thm3,
    #[serde(rename = "THM4")]
    Thm4,
    #[serde(rename = "THM5")]
    Thm5,
    #[serde(rename = "THM6")]
    Thm6,
    #[serde(rename = "THM7")]
    Thm7,
    #[serde(rename = "THM8")]
    Thm8,
    #[serde(rename = "THM9")]
    Thm9,
    #[serde(rename = "THM10")]
    Thm10,
    #[serde(rename = "COR1")]
    Cor1,
    #[serde(rename = "LEM2")]
    Lem2,
    #[serde(rename = "LEM3a")]
    Lem3a,
    #[serde(rename = "LEM3b")]
    Lem3b,
    #[serde(rename = "LEM4")]
    Lem4,
    #[serde(rename = "OBS1")]
    Obs1,
}

impl Claim {
    pub const ALL: [Claim; 15] = [
        Claim::Thm2,
        Claim::Thm3,
        Claim::Thm4,
        Claim::Thm5,
        Claim::Thm6,
        Claim::Thm7,
        Claim::Thm8,
        Claim::Thm9,
        Claim::Thm10,
        Claim::Cor1,
        Claim::Lem2,
        Claim::Lem3a,
        Claim::Lem3b,
        Claim::Lem4,
        Claim::Obs1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Thm2 => "THM2",
            Claim::Thm3 => "THM3",
            Claim::Thm4 => "THM4",
            Claim::Thm5 => "THM5",
            Claim::Thm6 => "THM6",
            Claim::Thm7 => "THM7",
            Claim::Thm8 => "THM8",
            Claim::Thm9 => "THM9",
            Claim::Thm10 => "THM10",
            Claim::Cor1 => "COR1",
            Claim::Lem2 => "LEM2",
            Claim::Lem3a => "LEM3a",
            Claim::Lem3b => "LEM3b",
            Claim::Lem4 => "LEM4",
            Claim::Obs1 => "OBS1",
        }
    }

    /// Smallest order the claim is checked at.
    pub fn n_min(self) -> usize {
        match self {
            Claim::Thm8 => THM8_N_MIN,
            _ => STRUCTURE_N_MIN,
        }
    }

    /// Whether the claim depends on the choice of root.
    pub fn root_sensitive(self) -> bool {
        !matches!(
            self,
            Claim::Thm2 | Claim::Thm3 | Claim::Thm4 | Claim::Cor1 | Claim::Lem2
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        Claim::ALL
            .into_iter()
            .find(|c| c.id().eq_ignore_ascii_case(t))
            .or(match t.to_ascii_uppercase().as_str() {
                "LEM3" => Some(Claim::Lem3a),
                _ => None,
            })
            .ok_or_else(|| Error::Parse(format!("unknown claim id {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail { witness: CanonicalCode, condition: String },
    NotApplicable,
}

impl Status {
    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail { .. })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimEntry {
    pub id: Claim,
    pub n: usize,
    #[serde(flatten)]
    pub status: Status,
}

fn rooted_violation(t: &Tree, p: &BranchProfile, claim: Claim) -> Option<String> {
    let root = p.root;
    match claim {
        Claim::Thm5 => {
            let big: Vec<String> = p
                .b_centers
                .iter()
                .chain(&p.b_star_centers)
                .filter(|(&k, v)| k >= 5 && !v.is_empty())
                .map(|(k, v)| format!("B{k} at {v:?}"))
                .collect();
            (!big.is_empty()).then(|| format!("branches with k >= 5: {}", big.join(", ")))
        }
        Claim::Thm6 => {
            let c = p.count(4);
            (c > 4).then(|| format!("{c} B4 branches, more than four"))
        }
        Claim::Thm7 => {
            let c = p.count(1);
            if c > 4 {
                return Some(format!("{c} B1 branches, more than four"));
            }
            let rooted = t.rooted(root);
            let kids: Vec<usize> = rooted.children(root).collect();
            let all_branches = kids.iter().all(|&k| p.kind(k).is_some());
            let b1_here = kids.iter().any(|&k| p.kind(k).is_some_and(|b| b.k == 1));
            (all_branches && b1_here && c > 3)
                .then(|| format!("{c} B1 branches in a tree that is itself a T_k branch, more than three"))
        }
        Claim::Thm8 => {
            let b2 = p.count(2) + p.count_star(2);
            let len3 = decompose_paths(t)
                .pendant_paths
                .iter()
                .filter(|q| q.length == 3)
                .count();
            (b2 > 0 && len3 > 0).then(|| format!("{b2} B2/B2* branches and {len3} pendant paths of length 3"))
        }
        Claim::Thm9 => together(p, 4, 2),
        Claim::Thm10 => together(p, 4, 1),
        Claim::Lem3a => common_parent(p, 1, 4),
        Claim::Lem3b => common_parent(p, 2, 4),
        Claim::Lem4 => {
            let rooted = t.rooted(root);
            p.b_star_centers.get(&1).into_iter().flatten().find_map(|&c| {
                let parent = rooted.parent(c)?;
                let b3 = p.inventory_of(parent)[2];
                (b3 > 0).then(|| format!("vertex {parent} is parent of {b3} B3 and the B1* at {c}"))
            })
        }
        Claim::Obs1 => {
            let v = bfs_degree_order_violations(t, root);
            v.first().map(|(a, b)| {
                format!(
                    "breadth-first order from {root} visits {a} (degree {}) before {b} (degree {})",
                    t.degree(*a),
                    t.degree(*b)
                )
            })
        }
        _ => unreachable!("root-free claim"),
    }
}

fn together(p: &BranchProfile, a: usize, b: usize) -> Option<String> {
    let (ca, cb) = (p.count(a), p.count(b));
    (ca > 0 && cb > 0).then(|| format!("{ca} B{a} and {cb} B{b} branches together"))
}

fn common_parent(p: &BranchProfile, a: usize, b: usize) -> Option<String> {
    p.inventory.iter().find_map(|(&v, inv)| {
        (inv[a - 1] > 0 && inv[b - 1] > 0).then(|| format!("vertex {v} is parent of a B{a} and a B{b} branch"))
    })
}

fn free_violation(t: &Tree, claim: Claim) -> Option<String> {
    let paths = decompose_paths(t);
    if let Some(len) = paths.whole_path {
        return match claim {
            Claim::Lem2 => None,
            _ => Some(format!("tree is a path of length {len}")),
        };
    }
    match claim {
        Claim::Thm2 => {
            if let Some(q) = paths.internal_paths.iter().find(|q| q.length >= 2) {
                return Some(format!("internal path {:?} of length {}", q.ends, q.length));
            }
            paths
                .pendant_paths
                .iter()
                .find(|q| q.length >= 4)
                .map(|q| format!("pendant path {}..{} of length {}", q.start, q.leaf, q.length))
        }
        Claim::Thm3 => paths
            .pendant_paths
            .iter()
            .find(|q| !(2..=3).contains(&q.length))
            .map(|q| format!("pendant path {}..{} of length {}", q.start, q.leaf, q.length)),
        Claim::Thm4 => {
            let c = paths.pendant_paths.iter().filter(|q| q.length == 3).count();
            (c > 1).then(|| format!("{c} pendant paths of length 3"))
        }
        Claim::Cor1 => {
            // The vertices of degree > 2 induce a forest; it is a tree iff
            // every internal path between them is a single edge.
            paths.internal_paths.iter().find(|q| q.length >= 2).map(|q| {
                format!(
                    "vertices {:?} of degree > 2 are joined through a degree-2 vertex",
                    q.ends
                )
            })
        }
        Claim::Lem2 => path_degree_ordering_violations(t)
            .first()
            .map(|w| format!("degrees {:?} along path {:?} are not ordered", w.degrees, w.path)),
        _ => unreachable!("root-sensitive claim"),
    }
}

/// The violated condition of `claim` in `t`, or `None` if it holds.
/// Root-sensitive claims hold if some maximum-degree root satisfies them;
/// the reported condition then refers to the first such root.
pub fn check_tree(claim: Claim, t: &Tree) -> Option<String> {
    if !claim.root_sensitive() {
        return free_violation(t, claim);
    }
    let mut first = None;
    for root in max_degree_roots(t) {
        let p = classify_branches(t, root);
        let msg = rooted_violation(t, &p, claim)?;
        first.get_or_insert(format!("root {root}: {msg}"));
    }
    first
}

/// Status of `claim` on a single tree, honoring the order at which the
/// claim applies.
pub fn evaluate_claim(claim: Claim, t: &Tree) -> ClaimEntry {
    let n = t.n();
    let status = if n < claim.n_min() {
        Status::NotApplicable
    } else {
        match check_tree(claim, t) {
            None => Status::Pass,
            Some(condition) => Status::Fail {
                witness: canonical_code(t),
                condition,
            },
        }
    };
    ClaimEntry { id: claim, n, status }
}

/// Status of `claim` over all minimizers of a record: the first failing
/// minimizer becomes the witness.
pub fn check_claim(claim: Claim, record: &MinimizerRecord) -> ClaimEntry {
    let n = record.n;
    if n < claim.n_min() {
        return ClaimEntry {
            id: claim,
            n,
            status: Status::NotApplicable,
        };
    }
    for (code, t) in record.minimizer_codes.iter().zip(record.witnesses()) {
        if let Some(condition) = check_tree(claim, &t) {
            return ClaimEntry {
                id: claim,
                n,
                status: Status::Fail {
                    witness: code.clone(),
                    condition,
                },
            };
        }
    }
    ClaimEntry {
        id: claim,
        n,
        status: Status::Pass,
    }
}

/// The path and breadth-first ordering conditions on every minimizer.
pub fn verify_lemma2_obs1(record: &MinimizerRecord) -> [ClaimEntry; 2] {
    [check_claim(Claim::Lem2, record), check_claim(Claim::Obs1, record)]
}
