use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Bounded list coloring: each item must take a color from its own list and
/// color `i` may be used at most `bounds[i]` times. Colors are `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListColoringInstance {
    graph: WeightedGraph,
    k: usize,
    lists: Vec<Vec<usize>>,
    bounds: Vec<usize>,
}

impl ListColoringInstance {
    /// Lists are sorted and de-duplicated. At most 64 colors.
    pub fn new(
        graph: WeightedGraph,
        k: usize,
        lists: Vec<Vec<usize>>,
        bounds: Vec<usize>,
    ) -> Result<Self> {
        if k > 64 {
            return Err(Error::param(format!("at most 64 colors supported, got {k}")));
        }
        if lists.len() != graph.item_count() {
            return Err(Error::param(format!(
                "{} lists for {} items",
                lists.len(),
                graph.item_count()
            )));
        }
        if bounds.len() != k {
            return Err(Error::param(format!("{} bounds for {k} colors", bounds.len())));
        }
        if let Some(c) = bounds.iter().position(|&b| b == 0) {
            return Err(Error::param(format!("bound of color {c} is zero")));
        }
        let mut clean = Vec::with_capacity(lists.len());
        for (item, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(Error::param(format!("list of item {item} is empty")));
            }
            if let Some(&c) = list.iter().find(|&&c| c >= k) {
                return Err(Error::param(format!("item {item} lists color {c} >= k = {k}")));
            }
            clean.push(list);
        }
        Ok(ListColoringInstance {
            graph,
            k,
            lists: clean,
            bounds,
        })
    }

    /// Every item may take every color; all bounds equal `b`.
    pub fn full(graph: WeightedGraph, k: usize, b: usize) -> Result<Self> {
        let lists = vec![(0..k).collect(); graph.item_count()];
        Self::new(graph, k, lists, vec![b; k])
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    /// True when `assignment` respects lists, bounds and conflicts.
    pub fn accepts(&self, assignment: &[usize]) -> bool {
        if assignment.len() != self.graph.item_count() {
            return false;
        }
        let mut used = vec![0usize; self.k];
        for (item, &c) in assignment.iter().enumerate() {
            if self.lists[item].binary_search(&c).is_err() {
                return false;
            }
            used[c] += 1;
            if self.graph.any_conflict(item, |x| assignment[x] == c) {
                return false;
            }
        }
        used.iter().zip(&self.bounds).all(|(u, b)| u <= b)
    }
}

const NONE: usize = usize::MAX;

/// Exact backtracking for bounded list coloring. Branches on the item with
/// the fewest remaining colors (ties to the smaller id), colors ascending.
/// Returns one color per item, or `None` when no assignment exists.
pub fn list_coloring_decision(inst: &ListColoringInstance, size_guard: usize) -> Result<Option<Vec<usize>>> {
    let m = inst.graph.item_count();
    if m > size_guard {
        return Err(Error::guard("item count", m, size_guard));
    }
    let masks = inst
        .lists
        .iter()
        .map(|l| l.iter().fold(0u64, |acc, &c| acc | (1u64 << c)))
        .collect();
    let mut s = ListSearch {
        inst,
        masks,
        assign: vec![NONE; m],
        used: vec![0; inst.k],
        left: m,
    };
    Ok(s.run().then_some(s.assign))
}

struct ListSearch<'a> {
    inst: &'a ListColoringInstance,
    masks: Vec<u64>,
    assign: Vec<usize>,
    used: Vec<usize>,
    left: usize,
}

impl ListSearch<'_> {
    fn domain(&self, item: usize, open: u64) -> u64 {
        let mut mask = self.masks[item] & open;
        self.inst.graph.any_conflict(item, |x| {
            if self.assign[x] != NONE {
                mask &= !(1u64 << self.assign[x]);
            }
            mask == 0
        });
        mask
    }

    fn run(&mut self) -> bool {
        if self.left == 0 {
            return true;
        }
        let open = (0..self.inst.k)
            .filter(|&c| self.used[c] < self.inst.bounds[c])
            .fold(0u64, |acc, c| acc | (1u64 << c));
        let capacity: usize = (0..self.inst.k)
            .map(|c| self.inst.bounds[c] - self.used[c])
            .sum();
        if capacity < self.left {
            return false;
        }

        let mut pick = None;
        for item in 0..self.assign.len() {
            if self.assign[item] != NONE {
                continue;
            }
            let d = self.domain(item, open);
            let size = d.count_ones();
            if size == 0 {
                return false;
            }
            if pick.is_none_or(|(_, _, s)| size < s) {
                pick = Some((item, d, size));
                if size == 1 {
                    break;
                }
            }
        }
        let (item, mut domain, _) = pick.expect("an unassigned item exists");
        while domain != 0 {
            let c = domain.trailing_zeros() as usize;
            domain &= domain - 1;
            self.assign[item] = c;
            self.used[c] += 1;
            self.left -= 1;
            if self.run() {
                return true;
            }
            self.left += 1;
            self.used[c] -= 1;
            self.assign[item] = NONE;
        }
        false
    }
}

/// Bounded list coloring with two colors (0 and 1), in polynomial time.
///
/// A connected conflict component has at most two proper 2-colorings, one
/// the swap of the other; lists prune them. The per-component usage counts
/// of color 0 are then combined by a reachability table over totals, and the
/// smallest feasible total of color 0 is realised.
pub fn two_color_list_bounded(
    g: &WeightedGraph,
    lists: &[Vec<usize>],
    b1: usize,
    b2: usize,
) -> Result<Option<Vec<usize>>> {
    let m = g.item_count();
    if lists.len() != m {
        return Err(Error::param(format!("{} lists for {m} items", lists.len())));
    }
    let allows = |item: usize, c: usize| lists[item].contains(&c);
    if let Some(item) = (0..m).find(|&i| lists[i].iter().any(|&c| c > 1)) {
        return Err(Error::param(format!("item {item} lists a color other than 0 or 1")));
    }

    // Parity 2-coloring of every conflict component.
    let mut parity = vec![NONE; m];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for s in 0..m {
        if parity[s] != NONE {
            continue;
        }
        parity[s] = 0;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for v in g.conflicts(u) {
                if parity[v] == NONE {
                    parity[v] = 1 - parity[u];
                    comp.push(v);
                } else if parity[v] == parity[u] {
                    return Ok(None);
                }
            }
        }
        components.push(comp);
    }

    // For each component, the feasible orientations: `flip = false` gives
    // parity 0 -> color 0.
    let options: Vec<Vec<(bool, usize)>> = components
        .iter()
        .map(|comp| {
            [false, true]
                .into_iter()
                .filter(|&flip| {
                    comp.iter()
                        .all(|&i| allows(i, parity[i] ^ usize::from(flip)))
                })
                .map(|flip| {
                    let zeros = comp
                        .iter()
                        .filter(|&&i| parity[i] ^ usize::from(flip) == 0)
                        .count();
                    (flip, zeros)
                })
                .collect()
        })
        .collect();

    // reach[t][z]: orientation chosen for component t-1 to reach z zeros.
    let mut reach: Vec<Vec<Option<(usize, bool)>>> = vec![vec![None; m + 1]];
    reach[0][0] = Some((0, false));
    for opts in &options {
        let prev = reach.last().expect("non-empty");
        let mut next = vec![None; m + 1];
        for z in 0..=m {
            if prev[z].is_none() {
                continue;
            }
            for &(flip, zeros) in opts {
                if next[z + zeros].is_none() {
                    next[z + zeros] = Some((z, flip));
                }
            }
        }
        reach.push(next);
    }
    let last = reach.last().expect("non-empty");
    let Some(mut z) = (0..=m).find(|&z| last[z].is_some() && z <= b1 && m - z <= b2) else {
        return Ok(None);
    };
    let mut assign = vec![NONE; m];
    for t in (0..components.len()).rev() {
        let (prev_z, flip) = reach[t + 1][z].expect("reachable");
        for &i in &components[t] {
            assign[i] = parity[i] ^ usize::from(flip);
        }
        z = prev_z;
    }
    Ok(Some(assign))
}
