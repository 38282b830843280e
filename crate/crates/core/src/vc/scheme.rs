use super::split::split;
use crate::coloring::{partition_items, require_mode, Coloring};
use crate::error::{Error, Result};
use crate::exact::{exact_bounded_coloring_upto, two_color_list_bounded};
use crate::graph::{Bipartition, Mode, WeightedGraph};
use crate::weight::Weight;

/// Parameters of `Scheme(p)`: ratio `1 + 1/H_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeParams {
    pub p: usize,
    /// Largest `b` for which exhaustive prefix solving is allowed (`p >= 4`).
    pub fixed_b_guard: usize,
}

impl SchemeParams {
    pub fn new(p: usize, fixed_b_guard: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::param("p must be at least 1"));
        }
        if fixed_b_guard == 0 {
            return Err(Error::param("fixed_b_guard must be at least 1"));
        }
        Ok(SchemeParams { p, fixed_b_guard })
    }
}

/// Finds an optimal coloring of a prefix graph with at most `max_colors`
/// classes, or reports that none exists.
pub trait PrefixSolver {
    fn solve(&self, prefix: &WeightedGraph, b: usize, max_colors: usize) -> Result<Option<Coloring>>;
}

/// Picks the cheapest exact method for the color budget: an independence
/// and size test for one color, thresholded two-color list decisions for
/// two, exhaustive search beyond.
#[derive(Debug, Clone, Copy, Default)]
pub struct RegimeSolver;

/// Always exhaustive search; used to cross-check [`RegimeSolver`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactPrefixSolver;

impl PrefixSolver for RegimeSolver {
    fn solve(&self, prefix: &WeightedGraph, b: usize, max_colors: usize) -> Result<Option<Coloring>> {
        let j = prefix.item_count();
        if j == 0 {
            return Ok(Some(Coloring::empty()));
        }
        let single = (j <= b && prefix.edge_count() == 0).then(|| Coloring::from_classes(prefix, vec![(0..j).collect()]));
        match max_colors {
            0 => Ok(None),
            1 => Ok(single),
            2 => {
                if single.is_some() {
                    return Ok(single);
                }
                optimal_two_coloring(prefix, b)
            }
            _ => ExactPrefixSolver.solve(prefix, b, max_colors),
        }
    }
}

impl PrefixSolver for ExactPrefixSolver {
    fn solve(&self, prefix: &WeightedGraph, b: usize, max_colors: usize) -> Result<Option<Coloring>> {
        let r = exact_bounded_coloring_upto(prefix, b, max_colors, prefix.item_count())?;
        Ok(r.map(|r| r.witness))
    }
}

/// Optimal coloring with at most two classes, or `None`.
///
/// The heavier class weighs the maximum vertex weight regardless, so only
/// the lighter class's weight `t` matters: the smallest `t` for which the
/// vertices heavier than `t` can all go to the first class is found by
/// trying thresholds in increasing order.
fn optimal_two_coloring(g: &WeightedGraph, b: usize) -> Result<Option<Coloring>> {
    let mut thresholds: Vec<Weight> = g.weights().to_vec();
    thresholds.sort_unstable();
    thresholds.dedup();
    for t in thresholds {
        let lists: Vec<Vec<usize>> = g
            .weights()
            .iter()
            .map(|x| if *x > t { vec![0] } else { vec![0, 1] })
            .collect();
        if let Some(assign) = two_color_list_bounded(g, &lists, b, b)? {
            let mut classes = vec![Vec::new(), Vec::new()];
            for (v, &c) in assign.iter().enumerate() {
                classes[c].push(v);
            }
            return Ok(Some(Coloring::from_classes(g, classes)));
        }
    }
    Ok(None)
}

/// `Scheme(p)` with the default prefix solver.
pub fn scheme(g: &WeightedGraph, bip: &Bipartition, b: usize, params: &SchemeParams) -> Result<Coloring> {
    scheme_with(g, bip, b, params, &RegimeSolver)
}

/// `Scheme(p)`: for every `j` up to `b(p-1)`, an optimal `(p-1)`-coloring of
/// the `j` heaviest vertices followed by Split on the rest; the lightest
/// candidate wins, ties to the smaller `j`.
pub fn scheme_with(
    g: &WeightedGraph,
    bip: &Bipartition,
    b: usize,
    params: &SchemeParams,
    solver: &dyn PrefixSolver,
) -> Result<Coloring> {
    require_mode(g, Mode::Vertex)?;
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    bip.check(g)?;
    let p = params.p;
    if p == 0 {
        return Err(Error::param("p must be at least 1"));
    }
    if p >= 4 && b > params.fixed_b_guard {
        return Err(Error::guard("b", b, params.fixed_b_guard));
    }
    if p == 1 {
        return split(g, bip, b);
    }

    let n = g.vertex_count();
    let order = g.items_by_weight();
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let jmax = b.saturating_mul(p - 1).min(n);
    let mut best: Option<Coloring> = None;
    for j in 0..=jmax {
        let (prefix, map) = g.induced_subgraph(&order[..j])?;
        let Some(head) = solver.solve(&prefix, b, p - 1)? else {
            continue;
        };
        let mut classes: Vec<Vec<usize>> = head
            .into_classes()
            .into_iter()
            .map(|c| c.into_iter().map(|i| map[i]).collect())
            .collect();
        let left: Vec<usize> = bip.left.iter().copied().filter(|&v| rank[v] >= j).collect();
        let right: Vec<usize> = bip.right.iter().copied().filter(|&v| rank[v] >= j).collect();
        classes.extend(partition_items(g, &left, b)?.blocks);
        classes.extend(partition_items(g, &right, b)?.blocks);
        let candidate = Coloring::from_classes(g, classes);
        if best
            .as_ref()
            .is_none_or(|c| candidate.total_weight() < c.total_weight())
        {
            best = Some(candidate);
        }
    }
    best.ok_or_else(|| Error::Infeasible("no prefix admits a solution".into()))
}
