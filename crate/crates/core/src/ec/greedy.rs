use crate::coloring::{require_mode, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Mode, WeightedGraph};

/// Graph class the color-count bound is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    General,
    Bipartite,
}

/// Bounds on the number of colors of any nice solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorCountBounds {
    pub lower: usize,
    pub upper: usize,
    pub regime: Regime,
}

impl ColorCountBounds {
    pub fn contains(&self, k: usize) -> bool {
        self.lower <= k && k <= self.upper
    }
}

/// Color-count bounds for nice solutions with `m` edges, maximum degree
/// `delta` and class bound `b`.
///
/// The lower bound is `max(delta, ceil(m/b))`. For the upper bound, let `x`
/// and `y` count the non-full classes before the last one that touch each
/// endpoint of an edge in the last class; the non-full classes then hold at
/// least `ceil((x+1)(y+1)/2)` edges (general) or `(x+1)(y+1)` (bipartite),
/// so
///
/// `k <= ceil(m/b) - ceil((x+1)(y+1) / (c*b)) + x + y + 1`
///
/// with `c = 2` or `1`. The bound returned is the maximum of this over
/// `0 <= x, y <= delta - 1`. When `delta <= 2b` (general) or `delta <= b`
/// (bipartite) the maximum sits at `x = y = delta - 1`, giving
/// `ceil(m/b) - ceil(delta^2/(c*b)) + 2*delta - 1`.
pub fn nice_color_count_bounds(m: usize, delta: usize, b: usize, regime: Regime) -> ColorCountBounds {
    assert!(b >= 1, "b must be at least 1");
    let base = m.div_ceil(b);
    let lower = delta.max(base);
    let c = match regime {
        Regime::General => 2,
        Regime::Bipartite => 1,
    };
    let mut upper = base as i64;
    for x in 0..delta {
        for y in 0..delta {
            let full = ((x + 1) * (y + 1)).div_ceil(c * b);
            upper = upper.max((base + x + y + 1) as i64 - full as i64);
        }
    }
    ColorCountBounds {
        lower,
        upper: upper as usize,
        regime,
    }
}

/// First-fit over edges in weight order: each edge joins the earliest
/// created class that has fewer than `b` edges and no edge sharing an
/// endpoint, else opens a new class.
pub fn greedy_ec(g: &WeightedGraph, b: usize) -> Result<Coloring> {
    require_mode(g, Mode::Edge)?;
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut touched: Vec<Vec<bool>> = Vec::new();
    for e in g.items_by_weight() {
        let (u, v) = g.edge(e);
        let slot = (0..classes.len()).find(|&c| classes[c].len() < b && !touched[c][u] && !touched[c][v]);
        let c = slot.unwrap_or_else(|| {
            classes.push(Vec::new());
            touched.push(vec![false; g.vertex_count()]);
            classes.len() - 1
        });
        classes[c].push(e);
        touched[c][u] = true;
        touched[c][v] = true;
    }
    Ok(Coloring::from_classes(g, classes))
}

/// A coloring is nice when each class, in order, is full (`b` edges) or a
/// maximal matching among the edges not placed in earlier classes.
pub fn is_nice(g: &WeightedGraph, coloring: &Coloring, b: usize) -> bool {
    let mut placed = vec![false; g.item_count()];
    for class in coloring.classes() {
        if class.len() != b {
            let mut touched = vec![false; g.vertex_count()];
            for &e in class {
                let (u, v) = g.edge(e);
                touched[u] = true;
                touched[v] = true;
            }
            let extendable = (0..g.item_count()).any(|e| {
                let (u, v) = g.edge(e);
                !placed[e] && !class.contains(&e) && !touched[u] && !touched[v]
            });
            if extendable {
                return false;
            }
        }
        for &e in class {
            placed[e] = true;
        }
    }
    true
}
