use crate::coloring::{partition_items, require_mode, Coloring};
use crate::error::{Error, Result};
use crate::exact::two_color_list_bounded;
use crate::graph::{Bipartition, Mode, WeightedGraph};

/// Colors each side of the bipartition by its own ordered b-partition.
///
/// Uses `ceil(|U|/b) + ceil(|V|/b)` classes and weighs at most twice the
/// optimum.
pub fn split(g: &WeightedGraph, bip: &Bipartition, b: usize) -> Result<Coloring> {
    require_mode(g, Mode::Vertex)?;
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    bip.check(g)?;
    let mut classes = partition_items(g, &bip.left, b)?.blocks;
    classes.extend(partition_items(g, &bip.right, b)?.blocks);
    Ok(Coloring::from_classes(g, classes))
}

/// Bounded vertex coloring of a bipartite graph with equal weights, within
/// 4/3 of the minimum number of classes.
///
/// Above `2b` vertices Split is already within 4/3. Between `b` and `2b` the
/// optimum is two or three classes and two is decided exactly. Up to `b`
/// vertices one class suffices for an edgeless graph and the two sides
/// otherwise.
pub fn vc_b_bipartite(g: &WeightedGraph, bip: &Bipartition, b: usize) -> Result<Coloring> {
    require_mode(g, Mode::Vertex)?;
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    if g.weights().windows(2).any(|p| p[0] != p[1]) {
        return Err(Error::param("all vertex weights must be equal"));
    }
    bip.check(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Coloring::empty());
    }
    if n <= b {
        let classes = if g.edge_count() == 0 {
            vec![(0..n).collect()]
        } else {
            vec![bip.left.clone(), bip.right.clone()]
        };
        return Ok(Coloring::from_classes(g, classes));
    }
    if n <= 2 * b {
        let lists = vec![vec![0, 1]; n];
        if let Some(assign) = two_color_list_bounded(g, &lists, b, b)? {
            let mut classes = vec![Vec::new(), Vec::new()];
            for (v, &c) in assign.iter().enumerate() {
                classes[c].push(v);
            }
            return Ok(Coloring::from_classes(g, classes));
        }
    }
    split(g, bip, b)
}
