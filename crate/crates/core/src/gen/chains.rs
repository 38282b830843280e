use crate::error::{Error, Result};
use crate::exact::ListColoringInstance;
use crate::graph::{structure_probe, Mode, WeightedGraph};

/// Per-color bound of the chain problem the tree construction starts from.
pub const CHAIN_BOUND: usize = 5;

/// Edge list coloring on disjoint paths: every edge lists exactly two
/// colors out of `0..k`, and every color may be used `bound` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainListInstance {
    graph: WeightedGraph,
    k: usize,
    lists: Vec<[usize; 2]>,
    bound: usize,
}

impl ChainListInstance {
    /// Uses the standard bound of five.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, k: usize, lists: Vec<[usize; 2]>) -> Result<Self> {
        Self::with_bound(vertex_count, edges, k, lists, CHAIN_BOUND)
    }

    pub fn with_bound(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        k: usize,
        lists: Vec<[usize; 2]>,
        bound: usize,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::param("k must be positive"));
        }
        if bound == 0 {
            return Err(Error::param("bound must be positive"));
        }
        if lists.len() != edges.len() {
            return Err(Error::param(format!("{} lists for {} edges", lists.len(), edges.len())));
        }
        for (e, l) in lists.iter().enumerate() {
            if l[0] == l[1] || l[0] >= k || l[1] >= k {
                return Err(Error::param(format!(
                    "edge {e} needs two distinct colors below {k}, got {} {}",
                    l[0], l[1]
                )));
            }
        }
        let graph = WeightedGraph::unit(Mode::Edge, vertex_count, edges)?;
        require_paths(&graph)?;
        let lists = lists.into_iter().map(|[a, b]| [a.min(b), a.max(b)]).collect();
        Ok(ChainListInstance { graph, k, lists, bound })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lists(&self) -> &[[usize; 2]] {
        &self.lists
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// How many lists mention each color.
    pub fn frequencies(&self) -> Vec<usize> {
        let mut f = vec![0; self.k];
        for l in &self.lists {
            f[l[0]] += 1;
            f[l[1]] += 1;
        }
        f
    }

    pub fn to_list_instance(&self) -> Result<ListColoringInstance> {
        ListColoringInstance::new(
            self.graph.clone(),
            self.k,
            self.lists.iter().map(|l| l.to_vec()).collect(),
            vec![self.bound; self.k],
        )
    }
}

fn require_paths(g: &WeightedGraph) -> Result<()> {
    let info = structure_probe(g);
    if !info.is_forest || info.max_degree > 2 {
        return Err(Error::structure("every component must be a path"));
    }
    Ok(())
}

/// Brings an edge list coloring on paths with lists of one or two colors
/// and bounds of at most five to the uniform shape of [`ChainListInstance`].
///
/// A color with bound `b_i < 5` gets `5 - b_i` fresh edges listing only it.
/// Two new colors are then added: the first joins every one-color list, and
/// ten fresh edges list both of them. Fresh edges use fresh vertices.
pub fn normalize_chain_list_instance(inst: &ListColoringInstance) -> Result<ChainListInstance> {
    let g = inst.graph();
    if g.mode() != Mode::Edge {
        return Err(Error::param("chain instances are edge colorings"));
    }
    require_paths(g)?;
    let k = inst.k();
    if let Some((c, &b)) = inst.bounds().iter().enumerate().find(|(_, &b)| b > CHAIN_BOUND) {
        return Err(Error::param(format!("bound {b} of color {c} exceeds {CHAIN_BOUND}")));
    }
    if let Some(e) = inst.lists().iter().position(|l| l.len() > 2) {
        return Err(Error::param(format!("list of edge {e} has more than two colors")));
    }
    let mut n = g.vertex_count();
    let mut edges = g.edges().to_vec();
    let mut lists: Vec<Vec<usize>> = inst.lists().to_vec();
    let mut fresh_edge = |list: Vec<usize>, edges: &mut Vec<(usize, usize)>, lists: &mut Vec<Vec<usize>>| {
        edges.push((n, n + 1));
        n += 2;
        lists.push(list);
    };
    for (c, &b) in inst.bounds().iter().enumerate() {
        for _ in b..CHAIN_BOUND {
            fresh_edge(vec![c], &mut edges, &mut lists);
        }
    }
    for l in lists.iter_mut() {
        if l.len() == 1 {
            l.push(k);
        }
    }
    for _ in 0..10 {
        fresh_edge(vec![k, k + 1], &mut edges, &mut lists);
    }
    let lists = lists.into_iter().map(|l| [l[0], l[1]]).collect();
    ChainListInstance::new(n, edges, k + 2, lists)
}

/// Turns vertex-weighted paths into edge-weighted paths with the same
/// conflicts: vertex `j` becomes edge `j`, and two edges share an endpoint
/// exactly when the vertices were adjacent.
pub fn chain_from_vertex_chain(g: &WeightedGraph) -> Result<WeightedGraph> {
    if g.mode() != Mode::Vertex {
        return Err(Error::param("expected a vertex-weighted graph"));
    }
    require_paths(g)?;
    let mut edges = vec![(0, 0); g.vertex_count()];
    let mut next = 0;
    for comp in g.components() {
        let start = comp
            .iter()
            .copied()
            .find(|&v| g.degree(v) <= 1)
            .expect("a path has an end");
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            edges[cur] = (next, next + 1);
            next += 1;
            match g.neighbors(cur).iter().find(|&&x| x != prev) {
                Some(&x) => (prev, cur) = (cur, x),
                None => break,
            }
        }
        next += 1;
    }
    WeightedGraph::edge_weighted(next, edges, g.weights().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::w;

    fn list_inst(n: usize, edges: Vec<(usize, usize)>, k: usize, lists: Vec<Vec<usize>>, bounds: Vec<usize>) -> ListColoringInstance {
        let g = WeightedGraph::unit(Mode::Edge, n, edges).unwrap();
        ListColoringInstance::new(g, k, lists, bounds).unwrap()
    }

    #[test]
    fn already_uniform_adds_ten_edges() {
        let inst = list_inst(3, vec![(0, 1), (1, 2)], 2, vec![vec![0, 1], vec![0, 1]], vec![5, 5]);
        let out = normalize_chain_list_instance(&inst).unwrap();
        assert_eq!(out.k(), 4);
        assert_eq!(out.graph().edge_count(), 12);
        assert!(out.lists()[2..].iter().all(|l| *l == [2, 3]));
    }

    #[test]
    fn padding_for_small_bound() {
        let inst = list_inst(2, vec![(0, 1)], 2, vec![vec![0, 1]], vec![3, 5]);
        let out = normalize_chain_list_instance(&inst).unwrap();
        assert_eq!(out.graph().edge_count(), 1 + 2 + 10);
        assert_eq!(&out.lists()[1..3], &[[0, 2], [0, 2]]);
    }

    #[test]
    fn empty_instance() {
        let inst = list_inst(0, vec![], 1, vec![], vec![5]);
        let out = normalize_chain_list_instance(&inst).unwrap();
        assert_eq!((out.k(), out.graph().edge_count()), (3, 10));
        assert!(out.lists().iter().all(|&l| l == [1, 2]));
    }

    #[test]
    fn singleton_list_gains_new_color() {
        let inst = list_inst(3, vec![(0, 1), (1, 2)], 2, vec![vec![1], vec![0, 1]], vec![5, 5]);
        let out = normalize_chain_list_instance(&inst).unwrap();
        assert_eq!(out.lists()[0], [1, 2]);
    }

    #[test]
    fn rejects_non_path() {
        let inst = list_inst(4, vec![(0, 1), (0, 2), (0, 3)], 2, vec![vec![0, 1]; 3], vec![5, 5]);
        assert!(matches!(normalize_chain_list_instance(&inst), Err(Error::InvalidStructure(_))));
        assert!(ChainListInstance::new(3, vec![(0, 1), (1, 2), (0, 2)], 2, vec![[0, 1]; 3]).is_err());
    }

    #[test]
    fn vertex_chain_to_edge_chain() {
        let g = WeightedGraph::vertex_weighted(4, vec![(2, 0), (0, 3)], vec![w(1), w(2), w(3), w(4)]).unwrap();
        let h = chain_from_vertex_chain(&g).unwrap();
        assert_eq!(h.edge_count(), 4);
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    assert_eq!(g.has_edge(a, b), h.items_conflict(a, b), "{a} {b}");
                }
            }
        }
        assert_eq!(h.weight(3), w(4));
    }
}
