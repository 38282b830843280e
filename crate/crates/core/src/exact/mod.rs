//! Exact solvers used as ground truth and as sub-solvers.
//!
//! All searches are exponential; every entry point takes a size guard and
//! refuses instances above it.

mod branch_bound;
mod list;
mod profiles;

pub use branch_bound::{exact_bounded_coloring_upto, oracle_opt};
pub use list::{list_coloring_decision, two_color_list_bounded, ListColoringInstance};
pub use profiles::{list_instance_for_profile, min_weight_via_lists, weight_profiles, ProfileSearch};

use crate::coloring::Coloring;
use crate::weight::Weight;

/// Default limit on the number of items an exhaustive search accepts.
pub const DEFAULT_SIZE_GUARD: usize = 12;

/// An optimal bounded max-coloring together with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub opt_weight: Weight,
    pub class_count: usize,
    /// Non-increasing.
    pub class_weights: Vec<Weight>,
    pub witness: Coloring,
}

impl OracleResult {
    pub(crate) fn from_witness(witness: Coloring) -> Self {
        OracleResult {
            opt_weight: witness.total_weight(),
            class_count: witness.class_count(),
            class_weights: witness.sorted_class_weights(),
            witness,
        }
    }
}
