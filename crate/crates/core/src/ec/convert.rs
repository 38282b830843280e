use crate::coloring::{partition_items, require_mode, Coloring};
use crate::error::{Error, Result};
use crate::graph::{sort_by_weight, structure_probe, Mode, WeightedGraph};

/// First phase of Convert: a proper edge coloring of a forest into exactly
/// `max_degree` matchings.
///
/// Each tree is rooted at its smallest vertex and walked in pre-order with
/// children in ascending id. At every vertex the edges to its children, in
/// weight order, go to the first matching with no edge at that vertex.
/// Matchings of different trees are merged index-wise.
pub fn convert_phase_one(g: &WeightedGraph) -> Result<Vec<Vec<usize>>> {
    require_mode(g, Mode::Edge)?;
    let info = structure_probe(g);
    if !info.is_forest {
        return Err(Error::structure("Convert needs a forest"));
    }
    let mut matching_of: Vec<Option<usize>> = vec![None; g.edge_count()];
    let mut visited = vec![false; g.vertex_count()];
    for comp in g.components() {
        let root = comp[0];
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let mut local: Vec<usize> = g.incident_edges(v).to_vec();
            sort_by_weight(&mut local, |e| g.weight(e));
            let mut taken: Vec<usize> = local.iter().filter_map(|&e| matching_of[e]).collect();
            let mut children = Vec::new();
            for e in local {
                if matching_of[e].is_some() {
                    continue; // edge to the parent
                }
                let slot = (0..).find(|i| !taken.contains(i)).expect("unbounded range");
                matching_of[e] = Some(slot);
                taken.push(slot);
                let (a, b) = g.edge(e);
                let child = if a == v { b } else { a };
                visited[child] = true;
                children.push(child);
            }
            children.sort_unstable();
            stack.extend(children.into_iter().rev());
        }
    }
    let mut matchings = vec![Vec::new(); info.max_degree];
    for (e, slot) in matching_of.into_iter().enumerate() {
        matchings[slot.expect("every edge of a forest is reached")].push(e);
    }
    Ok(matchings)
}

/// Convert: split every matching of [`convert_phase_one`] into its ordered
/// b-partition. Within twice the optimum on trees.
pub fn convert_ec_tree(g: &WeightedGraph, b: usize) -> Result<Coloring> {
    if b == 0 {
        return Err(Error::param("b must be at least 1"));
    }
    let mut classes = Vec::new();
    for m in convert_phase_one(g)? {
        classes.extend(partition_items(g, &m, b)?.blocks);
    }
    Ok(Coloring::from_classes(g, classes))
}
