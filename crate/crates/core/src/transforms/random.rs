use rand::Rng;

use super::{identify_case, CaseId, Relationship, TransformCase};
use crate::error::{Error, Result};
use crate::tree::{Tree, TreeBuilder};

/// Hangs a random small subtree below `parent`.
fn filler<R: Rng>(b: &mut TreeBuilder, parent: usize, rng: &mut R) {
    match rng.gen_range(0..6) {
        0 => {
            b.child(parent);
        }
        1 => {
            b.arm(parent, rng.gen_range(2..=3));
        }
        2 | 3 => {
            b.b_branch(parent, rng.gen_range(2..=5));
        }
        _ => {
            let c = b.child(parent);
            for _ in 0..rng.gen_range(2..=6) {
                if rng.gen_bool(0.5) {
                    b.child(c);
                } else {
                    b.b_branch(c, rng.gen_range(1..=4));
                }
            }
        }
    }
}

/// `(d(v), n1, n2, n3)` drawn from the configurations admitted by `id`.
fn v_shape<R: Rng>(id: CaseId, rng: &mut R) -> Result<(usize, usize, usize, usize)> {
    let shape = match id {
        CaseId::Switch => return Err(Error::Precondition("SWITCH has no case layout".into())),
        CaseId::T => {
            let dv = rng.gen_range(5..=8);
            let n2 = rng.gen_range(1..dv);
            let n3 = rng.gen_range(0..dv - n2);
            (dv, dv - 1 - n2 - n3, n2, n3)
        }
        CaseId::T7 => {
            let dv = rng.gen_range(5..=8);
            let n1 = rng.gen_range(1..=4.min(dv - 2));
            (dv, n1, 0, dv - 1 - n1)
        }
        _ => {
            let dvs = id.declared_dv().expect("fixed set");
            let dv = dvs[rng.gen_range(0..dvs.len())];
            let n2 = id.required_b2().expect("fixed n2");
            (dv, dv - 1 - n2, n2, 0)
        }
    };
    Ok(shape)
}

/// A random tree containing a valid configuration for `id` with the given
/// relationship between `u`, `v` and their parents, together with the
/// identified case.
pub fn random_instance<R: Rng>(id: CaseId, rel: Relationship, rng: &mut R) -> Result<(Tree, TransformCase)> {
    let (dv, n1, n2, n3) = v_shape(id, rng)?;
    let du = rng.gen_range(dv..=dv + 6);
    let mut b = TreeBuilder::new();
    let root = TreeBuilder::ROOT;
    let (u, v) = match rel {
        Relationship::A => {
            let u = b.child(root);
            let vp = if rng.gen_bool(0.5) { b.child(root) } else { b.child(u) };
            for _ in 0..rng.gen_range(0..3) {
                filler(&mut b, vp, rng);
            }
            (u, b.child(vp))
        }
        Relationship::B => {
            let u = b.child(root);
            (u, b.child(root))
        }
        Relationship::C => {
            let u = b.child(root);
            (u, b.child(u))
        }
        Relationship::D => (root, b.child(root)),
    };
    if u != root {
        for _ in 0..rng.gen_range(0..3) {
            filler(&mut b, root, rng);
        }
    }
    let present = 1 + usize::from(u != root) + b.children_of(u);
    b.b_branch(u, 4);
    for _ in 0..n2 {
        b.b_branch(v, 2);
    }
    for _ in 0..n1 {
        b.b_branch(v, 1);
    }
    for _ in 0..n3 {
        b.b_branch(v, 3);
    }
    for _ in present..du {
        filler(&mut b, u, rng);
    }
    let t = b.build();
    let case = identify_case(&t, root, id, u, v)?;
    Ok((t, case))
}
