//! Instance generators for the set-cover reductions (to trees over a given
//! test family and to monotone DNF for partial tables), the brute-force
//! solvers on both sides, and a seeded fuzz harness that checks answer
//! preservation.

mod dnf_reduction;
mod harness;
mod partial_dnf;
mod setcover;
mod tree_reduction;

pub use dnf_reduction::{
    reduce_3psc_to_mondnf_star, verify_dnf_conditions, ReducedDnfInstance, DNF_REDUCTION_CAP,
};
pub use harness::{
    all_3psc_instances, random_3psc_instance, random_sc_instance, verify_dnf_reduction,
    verify_dnf_reduction_exhaustive, verify_tree_reduction, HarnessConfig, HarnessReport,
};
pub use partial_dnf::{brute_min_mondnf_partial, PARTIAL_DNF_CAP};
pub use setcover::{brute_set_cover, SetCoverInstance, SET_COVER_CAP};
pub use tree_reduction::{reduce_sc_to_tree, reduce_sc_to_tree_with, ReducedTreeInstance, Shift};
