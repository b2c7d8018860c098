//! Atom-bond connectivity (ABC) index of trees: exhaustive enumeration,
//! greedy trees, the branch taxonomy of minimal-ABC trees, the
//! transformations that rule structures out, and a verifier that checks
//! the structural claims on actual minimizers.

pub mod abc;
pub mod analytic;
pub mod branches;
pub mod enumerate;
pub mod error;
pub mod greedy;
pub mod io;
pub mod transforms;
pub mod tree;
pub mod verify;

pub use abc::{abc_index, degree_sequence, edge_contribution, is_tree_degree_sequence};
pub use branches::{classify_branches, decompose_paths, default_root, max_degree_roots, BranchProfile};
pub use enumerate::{canonical_code, enumerate_trees, CanonicalCode};
pub use error::{Error, Result};
pub use greedy::build_greedy_tree;
pub use transforms::{CaseId, DeltaReport, Relationship, TransformCase};
pub use tree::{DegreeSequence, Tree, TreeBuilder};
pub use verify::{find_minimal_abc_trees, Claim, ClaimEntry, MinimizerRecord, Status};
