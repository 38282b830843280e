//! Minimum bounded max-coloring by enumerating class-weight profiles and
//! deciding each with bounded list coloring.
//!
//! A profile `w_1 >= ... >= w_k` is feasible when the items can be colored
//! with `k` colors of capacity `b` such that item `u` only takes colors with
//! `w(u) <= w_i`. Every optimal coloring's class weights form such a profile,
//! drawn from the item weights with multiplicity, so the cheapest feasible
//! profile is the optimum.

use super::list::{list_coloring_decision, ListColoringInstance};
use super::OracleResult;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;
use num_traits::Zero;

/// Limits for [`min_weight_via_lists`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileSearch {
    /// At most this many classes (`None`: as many as there are items).
    pub max_classes: Option<usize>,
    /// Only profiles of total weight at most this are tried.
    pub budget: Option<Weight>,
    /// Item limit forwarded to the list-coloring search.
    pub item_guard: usize,
    /// Refuse when more candidate profiles than this exist.
    pub profile_guard: usize,
}

impl Default for ProfileSearch {
    fn default() -> Self {
        ProfileSearch {
            max_classes: None,
            budget: None,
            item_guard: super::DEFAULT_SIZE_GUARD,
            profile_guard: 100_000,
        }
    }
}

/// Candidate class-weight profiles, cheapest first (then fewer classes, then
/// lexicographically). Each is non-increasing, starts at the maximum item
/// weight and has room for every item at capacity `b`.
pub fn weight_profiles(g: &WeightedGraph, b: usize, limits: &ProfileSearch) -> Result<Vec<Vec<Weight>>> {
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    let m = g.item_count();
    if m == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut values: Vec<(Weight, usize)> = Vec::new();
    for &x in g.weights() {
        match values.iter_mut().find(|(v, _)| *v == x) {
            Some((_, n)) => *n += 1,
            None => values.push((x, 1)),
        }
    }
    values.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
    let max_classes = limits.max_classes.unwrap_or(m).min(m);
    let min_classes = m.div_ceil(b);

    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut overflow = false;
    enumerate(
        &values,
        0,
        &mut current,
        Weight::zero(),
        &Bounds {
            min_classes,
            max_classes,
            budget: limits.budget,
            guard: limits.profile_guard,
        },
        &mut out,
        &mut overflow,
    );
    if overflow {
        return Err(Error::guard("weight profiles", limits.profile_guard + 1, limits.profile_guard));
    }
    out.sort_by(|a, b| {
        let sa: Weight = a.iter().copied().sum();
        let sb: Weight = b.iter().copied().sum();
        sa.cmp(&sb).then(a.len().cmp(&b.len())).then_with(|| a.cmp(b))
    });
    Ok(out)
}

struct Bounds {
    min_classes: usize,
    max_classes: usize,
    budget: Option<Weight>,
    guard: usize,
}

fn enumerate(
    values: &[(Weight, usize)],
    idx: usize,
    current: &mut Vec<Weight>,
    sum: Weight,
    bounds: &Bounds,
    out: &mut Vec<Vec<Weight>>,
    overflow: &mut bool,
) {
    if *overflow {
        return;
    }
    if idx == values.len() {
        if current.len() >= bounds.min_classes {
            if out.len() == bounds.guard {
                *overflow = true;
                return;
            }
            out.push(current.clone());
        }
        return;
    }
    let (value, mult) = values[idx];
    // The heaviest item needs a class at least as heavy.
    let lowest = usize::from(idx == 0);
    let room = bounds.max_classes - current.len();
    for count in lowest..=mult.min(room) {
        let s = sum + value * Weight::from_integer(count as i64);
        if bounds.budget.is_some_and(|b| s > b) {
            break;
        }
        current.extend(std::iter::repeat_n(value, count));
        enumerate(values, idx + 1, current, s, bounds, out, overflow);
        current.truncate(current.len() - count);
    }
}

/// The list instance of a profile: item `u` may take color `i` iff
/// `w(u) <= profile[i]`; every color holds at most `b` items. `None` when
/// some item has no admissible color.
pub fn list_instance_for_profile(
    g: &WeightedGraph,
    profile: &[Weight],
    b: usize,
) -> Result<Option<ListColoringInstance>> {
    let lists: Vec<Vec<usize>> = g
        .weights()
        .iter()
        .map(|x| (0..profile.len()).filter(|&i| *x <= profile[i]).collect())
        .collect();
    if lists.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    ListColoringInstance::new(g.clone(), profile.len(), lists, vec![b; profile.len()]).map(Some)
}

/// Cheapest coloring found by deciding profiles in increasing total weight.
/// `None` when no profile within the limits is feasible.
pub fn min_weight_via_lists(
    g: &WeightedGraph,
    b: usize,
    limits: &ProfileSearch,
) -> Result<Option<OracleResult>> {
    if g.item_count() > limits.item_guard {
        return Err(Error::guard("item count", g.item_count(), limits.item_guard));
    }
    for profile in weight_profiles(g, b, limits)? {
        let Some(inst) = list_instance_for_profile(g, &profile, b)? else {
            continue;
        };
        if let Some(assign) = list_coloring_decision(&inst, limits.item_guard)? {
            let mut classes = vec![Vec::new(); profile.len()];
            for (item, &c) in assign.iter().enumerate() {
                classes[c].push(item);
            }
            let witness = Coloring::from_classes(g, classes);
            debug_assert_eq!(witness.total_weight(), profile.iter().copied().sum::<Weight>());
            return Ok(Some(OracleResult::from_witness(witness)));
        }
    }
    Ok(None)
}
