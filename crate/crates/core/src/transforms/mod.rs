//! Local rearrangements between a `B_4` branch under `u` and the branches
//! under a second vertex `v`, with their exact and bounding ABC deltas.
//!
//! Every transformation keeps the vertex set and only moves edges. Edges
//! incident to a degree-2 vertex weigh `1/sqrt(2)` regardless of the other
//! end, so arm and leaf moves that only touch such edges leave the index
//! unchanged and the delta reduces to the listed edge terms.

mod formula;
mod random;
mod switch;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abc::abc_index;
use crate::branches::{classify_branches, Branch};
use crate::error::{Error, Result};
use crate::tree::{Rooted, Tree, TreeEditor};

pub use formula::{
    bound_table, degree_shift, evaluate_bound, exception_windows, formula_delta, refined_bound, BoundRow,
    ExceptionWindow,
};
pub use random::random_instance;
pub use switch::{switch, SwitchReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "SWITCH")]
    Switch,
    T,
    T1,
    T2,
    T3,
    T41,
    T42,
    T5,
    T6,
    T7,
}

impl CaseId {
    /// The structural transformations, in order.
    pub const TRANSFORMS: [CaseId; 9] = [
        CaseId::T,
        CaseId::T1,
        CaseId::T2,
        CaseId::T3,
        CaseId::T41,
        CaseId::T42,
        CaseId::T5,
        CaseId::T6,
        CaseId::T7,
    ];

    /// Number of `B_2` children `v` must have, for the cases that fix it.
    pub fn required_b2(self) -> Option<usize> {
        match self {
            CaseId::T1 => Some(6),
            CaseId::T2 => Some(5),
            CaseId::T3 => Some(4),
            CaseId::T41 | CaseId::T42 => Some(3),
            CaseId::T5 => Some(2),
            CaseId::T6 => Some(1),
            CaseId::T7 => Some(0),
            CaseId::Switch | CaseId::T => None,
        }
    }

    /// Admissible `d(v)` values; `None` means any `d(v) >= 5`.
    pub fn declared_dv(self) -> Option<&'static [usize]> {
        match self {
            CaseId::T1 | CaseId::T42 => Some(&[7]),
            CaseId::T2 => Some(&[6, 7]),
            CaseId::T3 | CaseId::T5 => Some(&[5, 6, 7]),
            CaseId::T41 | CaseId::T6 => Some(&[5, 6]),
            CaseId::Switch | CaseId::T | CaseId::T7 => None,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseId::Switch => "SWITCH",
            CaseId::T => "T",
            CaseId::T1 => "T1",
            CaseId::T2 => "T2",
            CaseId::T3 => "T3",
            CaseId::T41 => "T41",
            CaseId::T42 => "T42",
            CaseId::T5 => "T5",
            CaseId::T6 => "T6",
            CaseId::T7 => "T7",
        };
        f.write_str(s)
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s.to_ascii_uppercase().as_str() {
            "SWITCH" => CaseId::Switch,
            "T" => CaseId::T,
            "T1" => CaseId::T1,
            "T2" => CaseId::T2,
            "T3" => CaseId::T3,
            "T41" => CaseId::T41,
            "T42" => CaseId::T42,
            "T5" => CaseId::T5,
            "T6" => CaseId::T6,
            "T7" => CaseId::T7,
            _ => return Err(Error::Parse(format!("unknown case {s:?}"))),
        };
        Ok(id)
    }
}

/// How `u`, `v` and their parents sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relationship {
    /// `u`, `v`, `u_p`, `v_p` pairwise distinct.
    A,
    /// `u_p = v_p`.
    B,
    /// `u = v_p` and `u` is not the root.
    C,
    /// `u = v_p` and `u` is the root.
    D,
}

impl Relationship {
    pub const ALL: [Relationship; 4] = [Relationship::A, Relationship::B, Relationship::C, Relationship::D];
}

/// A validated local configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformCase {
    pub id: CaseId,
    pub root: usize,
    pub u: usize,
    /// `B_4` center below `u`.
    pub u1: usize,
    pub up: Option<usize>,
    pub v: usize,
    /// First `B_2` child of `v` (or first `B_1` child for `T7`).
    pub v1: usize,
    pub vp: usize,
    /// Neighbors of `u` other than `u1`.
    pub x: Vec<usize>,
    pub du: usize,
    pub dv: usize,
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub relationship: Relationship,
    /// Centers of the `B_1`, `B_2` and `B_3` children of `v`, by id.
    pub v_b1: Vec<usize>,
    pub v_b2: Vec<usize>,
    pub v_b3: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaReport {
    pub case: TransformCase,
    /// `ABC(after) - ABC(before)` by recomputation.
    pub structural_delta: f64,
    /// The closed-form change evaluated with the instance's degrees.
    pub formula_delta: f64,
    /// The degree-only upper bound, when the parameters are in range.
    pub bound_delta: Option<f64>,
    pub refined_bound_delta: Option<f64>,
    /// Whether `formula_delta` is an identity for this configuration. When
    /// false it is an upper bound on `structural_delta`.
    pub exact: bool,
}

/// Tolerance for comparing structural and closed-form deltas.
pub const DELTA_TOLERANCE: f64 = 1e-9;

impl DeltaReport {
    /// Structural and closed-form deltas agree (or the closed form bounds
    /// the structural one from above, for inexact configurations).
    pub fn agrees(&self) -> bool {
        if self.exact {
            (self.structural_delta - self.formula_delta).abs() <= DELTA_TOLERANCE
        } else {
            self.structural_delta <= self.formula_delta + DELTA_TOLERANCE
        }
    }
}

/// Children of `c` that start a length-2 arm, paired with the arm's leaf.
fn arms(rooted: &Rooted<'_>, c: usize) -> Vec<(usize, usize)> {
    let t = rooted.tree();
    rooted
        .children(c)
        .filter_map(|a| {
            let mut kids = rooted.children(a);
            match (kids.next(), kids.next()) {
                (Some(l), None) if t.degree(l) == 1 => Some((a, l)),
                _ => None,
            }
        })
        .collect()
}

/// Validates the configuration around `u` and `v` for case `id` in `t`
/// rooted at `root`.
pub fn identify_case(t: &Tree, root: usize, id: CaseId, u: usize, v: usize) -> Result<TransformCase> {
    let n = t.n();
    if id == CaseId::Switch {
        return Err(Error::Precondition("SWITCH takes two edges, see `switch`".into()));
    }
    if root >= n || u >= n || v >= n {
        return Err(Error::Precondition(format!("vertex out of range 0..{n}")));
    }
    if u == v {
        return Err(Error::Precondition("u and v must differ".into()));
    }
    let rooted = t.rooted(root);
    let profile = classify_branches(t, root);
    let plain = |k| Some(Branch { k, star: false });

    let u1 = rooted
        .children(u)
        .find(|&c| profile.kind(c) == plain(4))
        .ok_or_else(|| Error::Precondition(format!("u = {u} has no B4 child")))?;
    let up = rooted.parent(u);
    let vp = rooted
        .parent(v)
        .ok_or_else(|| Error::Precondition("v must not be the root".into()))?;
    if up == Some(v) {
        return Err(Error::Precondition("v is the parent of u".into()));
    }
    let (du, dv) = (t.degree(u), t.degree(v));
    if dv < 5 || du < dv {
        return Err(Error::Precondition(format!(
            "need d(u) >= d(v) >= 5, got d(u) = {du}, d(v) = {dv}"
        )));
    }

    let (mut v_b1, mut v_b2, mut v_b3, mut other) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for c in rooted.children(v) {
        match profile.kind(c) {
            Some(Branch { k: 1, star: false }) => v_b1.push(c),
            Some(Branch { k: 2, star: false }) => v_b2.push(c),
            Some(Branch { k: 3, star: false }) => v_b3.push(c),
            _ => other.push(c),
        }
    }
    let (n1, n2, n3) = (v_b1.len(), v_b2.len(), v_b3.len());

    let v1 = match id {
        CaseId::T => *v_b2
            .first()
            .ok_or_else(|| Error::Precondition(format!("v = {v} has no B2 child")))?,
        CaseId::T7 => {
            if !other.is_empty() || n2 > 0 {
                return Err(Error::Precondition(format!(
                    "T7 needs only B1/B3 children under v, found {n2} B2 and {} others",
                    other.len()
                )));
            }
            if n1 == 0 || n3 == 0 {
                return Err(Error::Precondition(format!(
                    "T7 needs at least one B1 and one B3 child, found n1 = {n1}, n3 = {n3}"
                )));
            }
            if n1 > 4 {
                return Err(Error::Precondition(format!("n1 = {n1} exceeds 4")));
            }
            v_b1[0]
        }
        _ => {
            if !other.is_empty() || n3 > 0 {
                return Err(Error::Precondition(format!(
                    "{id} needs only B1/B2 children under v, found {n3} B3 and {} others",
                    other.len()
                )));
            }
            let want = id.required_b2().expect("fixed n2");
            if n2 != want {
                return Err(Error::Precondition(format!("{id} needs n2 = {want}, found n2 = {n2}")));
            }
            let dvs = id.declared_dv().expect("fixed d(v) set");
            if !dvs.contains(&dv) {
                return Err(Error::Precondition(format!(
                    "{id} needs d(v) in {dvs:?}, found d(v) = {dv} (n1 = {n1})"
                )));
            }
            v_b2[0]
        }
    };

    let relationship = if vp == u {
        if up.is_some() {
            Relationship::C
        } else {
            Relationship::D
        }
    } else if up == Some(vp) {
        Relationship::B
    } else {
        Relationship::A
    };
    let x = t.neighbors(u).iter().copied().filter(|&w| w != u1).collect();
    Ok(TransformCase {
        id,
        root,
        u,
        u1,
        up,
        v,
        v1,
        vp,
        x,
        du,
        dv,
        n1,
        n2,
        n3,
        relationship,
        v_b1,
        v_b2,
        v_b3,
    })
}

/// Edge moves for `case` applied to `t`.
fn rearrange(t: &Tree, case: &TransformCase) -> Result<Tree> {
    let rooted = t.rooted(case.root);
    let (u, v, u1) = (case.u, case.v, case.u1);
    let mut ed = TreeEditor::new(t.clone());
    let u_arm = arms(&rooted, u1)[0];
    let b = &case.v_b2;
    // (a-arm, b-arm) of a B2 center.
    let arms2 = |c: usize| {
        let a = arms(&rooted, c);
        (a[0], a[1])
    };

    match case.id {
        CaseId::T => ed.reattach(u_arm.0, u1, case.v1)?,
        CaseId::T1 | CaseId::T2 | CaseId::T3 => {
            // Move the first `m` B2 centers to u, give the first `r` of them
            // one extra arm each, and turn the freed leaves of the two
            // donors into a new B1 below v.
            let (m, donors) = match case.id {
                CaseId::T1 => (4, [b[4], b[5]]),
                CaseId::T2 => (3, [b[3], b[4]]),
                _ => (2, [b[2], b[3]]),
            };
            for &c in &b[..m] {
                ed.reattach(c, v, u)?;
            }
            let ((a1, l1), (bb1, _)) = arms2(donors[0]);
            let ((a2, l2), (bb2, _)) = arms2(donors[1]);
            let mut receivers = b.iter().copied();
            if case.id != CaseId::T3 {
                ed.reattach(u_arm.0, u1, receivers.next().expect("receiver"))?;
            }
            ed.reattach(bb1, donors[0], receivers.next().expect("receiver"))?;
            ed.reattach(bb2, donors[1], receivers.next().expect("receiver"))?;
            ed.reattach(l1, a1, v)?;
            ed.reattach(l2, a2, l1)?;
        }
        CaseId::T41 => {
            // Strip one arm and one leaf from each B2 child; the first freed
            // leaf becomes a degree-5 child of u carrying the three arms and
            // a path through the other two leaves.
            let parts: Vec<_> = b.iter().map(|&c| (c, arms2(c))).collect();
            let hub = parts[0].1 .0 .1;
            for &(c, ((a, l), (bb, _))) in &parts {
                ed.remove_edge(a, l)?;
                ed.reattach(bb, c, hub)?;
            }
            ed.add_edge(u, hub)?;
            let (l2, l3) = (parts[1].1 .0 .1, parts[2].1 .0 .1);
            ed.add_edge(hub, l2)?;
            ed.add_edge(l2, l3)?;
        }
        CaseId::T42 => {
            ed.reattach(b[0], v, u)?;
            ed.reattach(b[1], v, u)?;
            ed.reattach(u_arm.0, u1, b[0])?;
            ed.reattach(case.v_b1[0], v, b[1])?;
        }
        CaseId::T5 => {
            ed.reattach(b[0], v, u)?;
            ed.reattach(b[1], v, b[0])?;
            ed.reattach(u_arm.0, u1, v)?;
        }
        CaseId::T6 => {
            ed.reattach(b[0], v, u)?;
            ed.reattach(u_arm.0, u1, b[0])?;
        }
        CaseId::T7 => {
            for &c in &case.v_b3 {
                ed.reattach(c, v, u)?;
            }
            ed.reattach(u_arm.0, u1, v)?;
        }
        CaseId::Switch => unreachable!("rejected by identify_case"),
    }
    ed.finish()
}

/// Applies the transformation described by `case`, after re-validating it
/// against `t`.
pub fn apply_case_transform(t: &Tree, case: &TransformCase) -> Result<(Tree, DeltaReport)> {
    let case = identify_case(t, case.root, case.id, case.u, case.v)?;
    let after = rearrange(t, &case)?;
    let structural_delta = abc_index(&after) - abc_index(t);
    let formula_delta = formula_delta(t, &case);
    let n1 = Some(case.n1);
    let bound_delta = evaluate_bound(case.id, case.du, case.dv, n1).ok();
    let refined_bound_delta = refined_bound(case.id, case.du, case.dv, n1).ok();
    let exact =
        matches!(case.relationship, Relationship::A | Relationship::B) || matches!(case.id, CaseId::T | CaseId::T41);
    Ok((
        after,
        DeltaReport {
            case,
            structural_delta,
            formula_delta,
            bound_delta,
            refined_bound_delta,
            exact,
        },
    ))
}

/// Moves one length-2 arm from the `B_4` child of `u` to a `B_2` child of
/// `v`, turning both into `B_3` branches.
pub fn apply_t(t: &Tree, case: &TransformCase) -> Result<(Tree, DeltaReport)> {
    if case.id != CaseId::T {
        return Err(Error::Precondition(format!("expected case T, got {}", case.id)));
    }
    apply_case_transform(t, case)
}
