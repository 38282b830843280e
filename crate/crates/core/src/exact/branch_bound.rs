use super::OracleResult;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;
use num_traits::Zero;

const UNASSIGNED: usize = usize::MAX;

/// Minimum total weight over all proper colorings of `g` whose classes hold
/// at most `b` items.
///
/// Items are placed heaviest first; each joins an existing compatible class
/// or opens a new one (only after all earlier classes are non-empty, which
/// is implicit in appending). The first optimal witness found is returned.
pub fn oracle_opt(g: &WeightedGraph, b: usize, size_guard: usize) -> Result<OracleResult> {
    exact_bounded_coloring_upto(g, b, usize::MAX, size_guard)?
        .ok_or_else(|| Error::Infeasible("no coloring exists".into()))
}

/// Like [`oracle_opt`] but restricted to at most `max_colors` classes;
/// `None` when no such coloring exists.
pub fn exact_bounded_coloring_upto(
    g: &WeightedGraph,
    b: usize,
    max_colors: usize,
    size_guard: usize,
) -> Result<Option<OracleResult>> {
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    let m = g.item_count();
    if m > size_guard {
        return Err(Error::guard("item count", m, size_guard));
    }
    let mut search = Search {
        g,
        order: g.items_by_weight(),
        b,
        max_colors,
        assign: vec![UNASSIGNED; m],
        sizes: Vec::new(),
        partial: Weight::zero(),
        best: None,
    };
    search.dfs(0);
    Ok(search.best.map(|(_, assign)| {
        let classes_n = assign.iter().copied().max().map_or(0, |c| c + 1);
        let mut classes = vec![Vec::new(); classes_n];
        for (item, &c) in assign.iter().enumerate() {
            classes[c].push(item);
        }
        OracleResult::from_witness(Coloring::from_classes(g, classes))
    }))
}


struct Search<'a> {
    g: &'a WeightedGraph,
    order: Vec<usize>,
    b: usize,
    max_colors: usize,
    assign: Vec<usize>,
    sizes: Vec<usize>,
    partial: Weight,
    best: Option<(Weight, Vec<usize>)>,
}

impl Search<'_> {
    fn fits(&self, item: usize, class: usize) -> bool {
        self.sizes[class] < self.b && !self.g.any_conflict(item, |x| self.assign[x] == class)
    }

    /// Lower bound on the weight still to be added by items `order[pos..]`,
    /// or `None` when the remaining items cannot be placed at all.
    fn lower_bound(&self, pos: usize) -> Option<Weight> {
        let n = self.order.len();
        let remaining = n - pos;
        let free: usize = self.sizes.iter().map(|&s| self.b - s).sum();
        let room = self.max_colors.saturating_sub(self.sizes.len());

        let mut bound = Weight::zero();
        if remaining > free {
            // The lightest `overflow` items, partitioned optimally.
            let overflow = remaining - free;
            if overflow.div_ceil(self.b) > room {
                return None;
            }
            let tail = &self.order[n - overflow..];
            bound = tail.iter().step_by(self.b).map(|&i| self.g.weight(i)).sum();
        }
        // Existing classes only fill up, so an item that fits none of them
        // now must open a class of at least its own weight.
        let stranded = self.order[pos..]
            .iter()
            .find(|&&item| !(0..self.sizes.len()).any(|c| self.fits(item, c)));
        if let Some(&item) = stranded {
            if room == 0 {
                return None;
            }
            bound = bound.max(self.g.weight(item));
        }
        Some(bound)
    }

    fn dfs(&mut self, pos: usize) {
        if pos == self.order.len() {
            if self.best.as_ref().is_none_or(|(w, _)| self.partial < *w) {
                self.best = Some((self.partial, self.assign.clone()));
            }
            return;
        }
        let Some(lb) = self.lower_bound(pos) else {
            return;
        };
        if let Some((best, _)) = &self.best {
            if self.partial + lb >= *best {
                return;
            }
        }
        let item = self.order[pos];
        for c in 0..self.sizes.len() {
            if self.fits(item, c) {
                self.assign[item] = c;
                self.sizes[c] += 1;
                self.dfs(pos + 1);
                self.sizes[c] -= 1;
                self.assign[item] = UNASSIGNED;
            }
        }
        if self.sizes.len() < self.max_colors {
            let c = self.sizes.len();
            let wt = self.g.weight(item);
            self.assign[item] = c;
            self.sizes.push(1);
            self.partial += wt;
            self.dfs(pos + 1);
            self.partial -= wt;
            self.sizes.pop();
            self.assign[item] = UNASSIGNED;
        }
    }
}
