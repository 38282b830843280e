use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::exact::{min_weight_via_lists, ProfileSearch};
use crate::graph::{structure_probe, WeightedGraph};

/// Default limit on the number of class-weight combinations tried.
pub const DEFAULT_COMBINATION_GUARD: usize = 100_000;

/// Optimal bounded max-coloring of a forest with at most `k` classes, in
/// either mode.
///
/// Enumerates class-weight combinations `w_1 >= ... >= w_k` drawn from the
/// item weights, cheapest first, and decides each with a bounded list
/// coloring where item `u` may take color `i` iff `w(u) <= w_i`. Returns
/// `None` when `k` classes cannot color the forest.
pub fn tree_exact_fixed_k(
    g: &WeightedGraph,
    b: usize,
    k: usize,
    combination_guard: usize,
) -> Result<Option<Coloring>> {
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    if !structure_probe(g).is_forest {
        return Err(Error::structure("input is not a forest"));
    }
    if g.item_count() == 0 {
        return Ok(Some(Coloring::empty()));
    }
    if k == 0 {
        return Ok(None);
    }
    let limits = ProfileSearch {
        max_classes: Some(k),
        budget: None,
        item_guard: usize::MAX,
        profile_guard: combination_guard,
    };
    Ok(min_weight_via_lists(g, b, &limits)?.map(|r| r.witness))
}
