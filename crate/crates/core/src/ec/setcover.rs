use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;
use num_traits::Zero;
use std::cmp::Ordering;

/// Default limit on the number of candidate classes.
pub const DEFAULT_SUBSET_GUARD: usize = 200_000;

struct Candidate {
    items: Vec<usize>,
    cost: Weight,
}

/// Greedy weighted set cover over all conflict-free item sets of size at
/// most `b`, each costing its heaviest item. Works in either mode.
///
/// Every round takes the candidate with the lowest cost per newly covered
/// item (ties: lower cost, then lexicographically smaller ids); the new
/// class is the part of it not covered before. Within `H_b` of the optimum.
pub fn setcover_approx(g: &WeightedGraph, b: usize, size_guard: usize) -> Result<Coloring> {
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    let candidates = enumerate_candidates(g, b, size_guard)?;
    let m = g.item_count();
    let mut covered = vec![false; m];
    let mut left = m;
    let mut classes = Vec::new();
    while left > 0 {
        let mut best: Option<(&Candidate, usize)> = None;
        for cand in &candidates {
            let fresh = cand.items.iter().filter(|&&i| !covered[i]).count();
            if fresh == 0 {
                continue;
            }
            let better = match best {
                None => true,
                Some((cur, cur_fresh)) => {
                    let lhs = cand.cost * Weight::from_integer(cur_fresh as i64);
                    let rhs = cur.cost * Weight::from_integer(fresh as i64);
                    match lhs.cmp(&rhs) {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => cand.cost < cur.cost,
                    }
                }
            };
            if better {
                best = Some((cand, fresh));
            }
        }
        let (cand, fresh) = best.expect("singletons cover every item");
        let class: Vec<usize> = cand.items.iter().copied().filter(|&i| !covered[i]).collect();
        for &i in &class {
            covered[i] = true;
        }
        left -= fresh;
        classes.push(class);
    }
    Ok(Coloring::from_classes(g, classes))
}

/// Conflict-free sets of size `1..=b` in lexicographic order of their
/// ascending id lists.
fn enumerate_candidates(g: &WeightedGraph, b: usize, guard: usize) -> Result<Vec<Candidate>> {
    fn extend(
        g: &WeightedGraph,
        b: usize,
        guard: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Candidate>,
    ) -> Result<()> {
        for i in start..g.item_count() {
            if current.iter().any(|&j| g.items_conflict(i, j)) {
                continue;
            }
            current.push(i);
            if out.len() == guard {
                return Err(Error::guard("candidate classes", guard + 1, guard));
            }
            let cost = current.iter().map(|&j| g.weight(j)).fold(Weight::zero(), Weight::max);
            out.push(Candidate {
                items: current.clone(),
                cost,
            });
            if current.len() < b {
                extend(g, b, guard, i + 1, current, out)?;
            }
            current.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(g, b, guard, 0, &mut Vec::new(), &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_coloring;
    use crate::weight::w;

    #[test]
    fn vertex_mode_cheapest_per_item_first() {
        // Edge u-v (5, 3) plus isolated z (1). {z} goes first at 1 per item,
        // then {v} and {u}.
        let g = WeightedGraph::vertex_weighted(3, vec![(0, 1)], vec![w(5), w(3), w(1)]).unwrap();
        let c = setcover_approx(&g, 2, DEFAULT_SUBSET_GUARD).unwrap();
        assert_eq!(c.classes(), &[vec![2], vec![1], vec![0]]);
        assert_eq!(c.total_weight(), w(9));
        assert!(validate_coloring(&g, &c, 2).is_valid());
    }

    #[test]
    fn single_items() {
        let g = WeightedGraph::vertex_weighted(1, vec![], vec![w(6)]).unwrap();
        assert_eq!(setcover_approx(&g, 3, 10).unwrap().total_weight(), w(6));
        let e = WeightedGraph::edge_weighted(2, vec![(0, 1)], vec![w(4)]).unwrap();
        assert_eq!(setcover_approx(&e, 3, 10).unwrap().total_weight(), w(4));
    }

    #[test]
    fn equal_weights_pack_into_full_classes() {
        let g = WeightedGraph::vertex_weighted(4, vec![], vec![w(2); 4]).unwrap();
        let c = setcover_approx(&g, 2, 100).unwrap();
        assert_eq!(c.classes(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn guard_trips() {
        let g = WeightedGraph::vertex_weighted(10, vec![], vec![w(1); 10]).unwrap();
        assert!(matches!(setcover_approx(&g, 3, 100), Err(Error::GuardExceeded { .. })));
    }
}
