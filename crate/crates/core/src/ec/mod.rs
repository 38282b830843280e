//! Approximation algorithms for bounded max-edge-coloring, plus the
//! set-cover method shared by both modes.

mod convert;
mod greedy;
mod setcover;

pub use convert::{convert_ec_tree, convert_phase_one};
pub use greedy::{greedy_ec, is_nice, nice_color_count_bounds, ColorCountBounds, Regime};
pub use setcover::{setcover_approx, DEFAULT_SUBSET_GUARD};
