//! Approximation algorithms for bounded max-vertex-coloring.

mod scheme;
mod split;
mod tree_exact;

pub use scheme::{scheme, scheme_with, ExactPrefixSolver, PrefixSolver, RegimeSolver, SchemeParams};
pub use split::{split, vc_b_bipartite};
pub use tree_exact::{tree_exact_fixed_k, DEFAULT_COMBINATION_GUARD};
