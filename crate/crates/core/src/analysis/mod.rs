//! Structural analysis used by strategies and verifiers.
//!
//! Path and cycle lengths are counted in edges throughout.

mod coloring;
mod cycles;
mod expansion;
mod paths;

pub use coloring::{
    degeneracy_order, dsatur_coloring, exact_chromatic, greedy_coloring, Coloring,
    EXACT_CHROMATIC_MAX_N,
};
pub use cycles::{collision_length_bound, girth, self_colliding_path, shortest_cycle, SelfCollidingPath};
pub(crate) use cycles::CycleSearch;
pub use expansion::{isoperimetric_profile, IsoperimetricProfile, PROFILE_SUBSET_BUDGET};
pub use paths::{
    longest_directed_path_exact, longest_directed_path_structured, EXACT_LONGEST_PATH_MAX_N,
};

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard { what: &'static str, actual: usize, limit: usize },
    #[error("certificate does not match orientation: {0}")]
    CertificateMismatch(String),
}
