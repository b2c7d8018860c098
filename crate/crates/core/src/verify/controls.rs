use super::Claim;
use crate::tree::{Tree, TreeBuilder};

#[derive(Clone, Copy)]
enum Part {
    Leaf,
    Arm(usize),
    B(usize),
    BStar(usize),
}

fn hang(b: &mut TreeBuilder, at: usize, parts: &[(usize, Part)]) {
    for &(count, part) in parts {
        for _ in 0..count {
            match part {
                Part::Leaf => {
                    b.child(at);
                }
                Part::Arm(len) => {
                    b.arm(at, len);
                }
                Part::B(k) => {
                    b.b_branch(at, k);
                }
                Part::BStar(k) => {
                    let c = b.b_branch(at, k - 1);
                    b.arm(c, 3);
                }
            }
        }
    }
}

fn rooted_at_zero(parts: &[(usize, Part)]) -> Tree {
    let mut b = TreeBuilder::new();
    hang(&mut b, TreeBuilder::ROOT, parts);
    b.build()
}

/// A tree of order at least 10 (19 for THM8) that violates `claim` under
/// every maximum-degree root.
pub fn negative_control(claim: Claim) -> Tree {
    use Part::*;
    match claim {
        Claim::Thm2 | Claim::Cor1 => {
            let mut b = TreeBuilder::new();
            hang(&mut b, TreeBuilder::ROOT, &[(3, B(2))]);
            let mid = b.child(TreeBuilder::ROOT);
            let other = b.child(mid);
            hang(&mut b, other, &[(3, B(2))]);
            b.build()
        }
        Claim::Thm3 => rooted_at_zero(&[(4, B(3)), (1, Leaf)]),
        Claim::Thm4 => rooted_at_zero(&[(4, B(3)), (2, Arm(3))]),
        Claim::Thm5 => rooted_at_zero(&[(7, B(3)), (1, B(5))]),
        Claim::Thm6 => rooted_at_zero(&[(5, B(4)), (1, B(3))]),
        Claim::Thm7 => rooted_at_zero(&[(5, B(1)), (2, B(3))]),
        Claim::Thm8 => rooted_at_zero(&[(4, B(3)), (1, B(2)), (1, BStar(3))]),
        Claim::Thm9 | Claim::Lem3b => rooted_at_zero(&[(2, B(4)), (1, B(2)), (3, B(3))]),
        Claim::Thm10 | Claim::Lem3a => rooted_at_zero(&[(2, B(4)), (1, B(1)), (3, B(3))]),
        Claim::Lem4 => rooted_at_zero(&[(4, B(3)), (1, Arm(3))]),
        Claim::Lem2 => {
            // Hubs of degree 4, 3, 5 in a row.
            let mut b = TreeBuilder::new();
            let a = TreeBuilder::ROOT;
            hang(&mut b, a, &[(3, Leaf)]);
            let mid = b.child(a);
            b.child(mid);
            let c = b.child(mid);
            hang(&mut b, c, &[(4, Leaf)]);
            b.build()
        }
        Claim::Obs1 => {
            // A degree-5 vertex below a degree-4 vertex, visited after a
            // degree-3 vertex one level up.
            let mut b = TreeBuilder::new();
            let r = TreeBuilder::ROOT;
            hang(&mut b, r, &[(4, B(3))]);
            let x = b.child(r);
            hang(&mut b, x, &[(2, Leaf)]);
            let y = b.child(r);
            b.child(y);
            b.child(y);
            let z = b.child(y);
            hang(&mut b, z, &[(4, Leaf)]);
            b.build()
        }
    }
}

/// A tree that is itself a T_k branch with four B1 branches: the bound
/// of three applies, and it is exceeded.
pub fn t_k_control() -> Tree {
    rooted_at_zero(&[(4, Part::B(1)), (1, Part::B(3))])
}

/// Four B1 branches below one terminal vertex that is not the root: the
/// bound of four is met exactly.
pub fn thm7_boundary() -> Tree {
    let mut b = TreeBuilder::new();
    hang(&mut b, TreeBuilder::ROOT, &[(6, Part::B(3))]);
    let w = b.child(TreeBuilder::ROOT);
    hang(&mut b, w, &[(4, Part::B(1)), (1, Part::B(3))]);
    b.build()
}
