//! Weighted graphs in vertex or edge mode, plus structure detection.
//!
//! The "items" of a graph are what gets colored: vertices in vertex mode,
//! edges (by index) in edge mode. Two items conflict when they may not share
//! a color class: adjacent vertices, or edges sharing an endpoint.

use crate::error::{Error, Result};
use crate::weight::Weight;
use num_traits::{One, Zero};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Which elements carry weights and get colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Vertex,
    Edge,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Vertex => f.write_str("vertex"),
            Mode::Edge => f.write_str("edge"),
        }
    }
}

/// Simple undirected graph with positive rational weights on its items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    mode: Mode,
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<Weight>,
    adj: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl WeightedGraph {
    /// Builds a graph, canonicalising every edge to `(min, max)`.
    ///
    /// `weights` has one entry per vertex in vertex mode and one per edge in
    /// edge mode.
    pub fn new(
        mode: Mode,
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        weights: Vec<Weight>,
    ) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut canon = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::structure(format!(
                    "edge {i} ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::structure(format!("edge {i} is a self-loop on {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::structure(format!(
                    "duplicate edge ({}, {})",
                    e.0, e.1
                )));
            }
            canon.push(e);
        }
        let expected = match mode {
            Mode::Vertex => vertex_count,
            Mode::Edge => canon.len(),
        };
        if weights.len() != expected {
            return Err(Error::param(format!(
                "{mode} mode needs {expected} weights, got {}",
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|x| *x <= Weight::zero()) {
            return Err(Error::param(format!("weight of item {i} is not positive")));
        }

        let mut adj = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in canon.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            incident[u].push(i);
            incident[v].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(WeightedGraph {
            mode,
            vertex_count,
            edges: canon,
            weights,
            adj,
            incident,
        })
    }

    pub fn vertex_weighted(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        weights: Vec<Weight>,
    ) -> Result<Self> {
        Self::new(Mode::Vertex, vertex_count, edges, weights)
    }

    pub fn edge_weighted(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        weights: Vec<Weight>,
    ) -> Result<Self> {
        Self::new(Mode::Edge, vertex_count, edges, weights)
    }

    /// Same structure with every item weight set to one.
    pub fn unit(mode: Mode, vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let count = match mode {
            Mode::Vertex => vertex_count,
            Mode::Edge => edges.len(),
        };
        Self::new(mode, vertex_count, edges, vec![Weight::one(); count])
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    /// Number of colorable items: vertices or edges depending on the mode.
    pub fn item_count(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, item: usize) -> Weight {
        self.weights[item]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adj[u].binary_search(&v).is_ok()
    }

    /// True when `a` and `b` may not share a color class.
    pub fn items_conflict(&self, a: usize, b: usize) -> bool {
        if a == b {
            return false;
        }
        match self.mode {
            Mode::Vertex => self.has_edge(a, b),
            Mode::Edge => {
                let (p, q) = self.edges[a];
                let (r, s) = self.edges[b];
                p == r || p == s || q == r || q == s
            }
        }
    }

    /// Returns true as soon as `pred` holds for one item conflicting with `item`.
    ///
    /// In edge mode the line-graph neighborhood is walked through the
    /// incidence lists of both endpoints.
    pub fn any_conflict(&self, item: usize, mut pred: impl FnMut(usize) -> bool) -> bool {
        match self.mode {
            Mode::Vertex => self.adj[item].iter().any(|&x| pred(x)),
            Mode::Edge => {
                let (u, v) = self.edges[item];
                self.incident[u]
                    .iter()
                    .chain(self.incident[v].iter())
                    .any(|&e| e != item && pred(e))
            }
        }
    }

    /// All items conflicting with `item`, ascending.
    pub fn conflicts(&self, item: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.any_conflict(item, |x| {
            out.push(x);
            false
        });
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Items sorted by weight descending, ties by smaller id.
    pub fn items_by_weight(&self) -> Vec<usize> {
        let mut items: Vec<usize> = (0..self.item_count()).collect();
        sort_by_weight(&mut items, |i| self.weights[i]);
        items
    }

    /// Subgraph induced by `vertices` (vertex mode), relabelled to
    /// `0..vertices.len()` in the given order. Returns the subgraph and the
    /// new-to-old id map.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(WeightedGraph, Vec<usize>)> {
        if self.mode != Mode::Vertex {
            return Err(Error::param("induced subgraphs are taken in vertex mode"));
        }
        let mut new_id = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
            }
        }
        let weights = vertices.iter().map(|&v| self.weights[v]).collect();
        let g = WeightedGraph::vertex_weighted(vertices.len(), edges, weights)?;
        Ok((g, vertices.to_vec()))
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Sorts ids by weight descending; equal weights keep the smaller id first.
pub fn sort_by_weight(items: &mut [usize], weight: impl Fn(usize) -> Weight) {
    items.sort_by(|&a, &b| weight(b).cmp(&weight(a)).then(a.cmp(&b)));
}

/// The two sides of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    /// Checks that the sides partition the vertex set and every edge crosses.
    pub fn check(&self, g: &WeightedGraph) -> Result<()> {
        let mut side = vec![None; g.vertex_count()];
        for (s, part) in [(0u8, &self.left), (1u8, &self.right)] {
            for &v in part {
                if v >= g.vertex_count() {
                    return Err(Error::structure(format!("bipartition names unknown vertex {v}")));
                }
                if side[v].replace(s).is_some() {
                    return Err(Error::structure(format!("vertex {v} is on both sides")));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::structure(format!("vertex {v} is on neither side")));
        }
        if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| side[u] == side[v]) {
            return Err(Error::structure(format!("edge ({u}, {v}) does not cross the bipartition")));
        }
        Ok(())
    }
}

/// Result of [`structure_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureInfo {
    pub bipartition: Option<Bipartition>,
    pub is_tree: bool,
    pub is_forest: bool,
    pub max_degree: usize,
    pub component_count: usize,
}

impl StructureInfo {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// Detects bipartiteness (by BFS 2-coloring, each component's smallest
/// vertex on the left), acyclicity and the maximum degree.
pub fn structure_probe(g: &WeightedGraph) -> StructureInfo {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut bipartite = true;
    let components = g.components();
    for comp in &components {
        let root = comp[0];
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are labelled");
            for &v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => bipartite = false,
                    Some(_) => {}
                }
            }
        }
    }
    let bipartition = bipartite.then(|| {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, s) in side.iter().enumerate() {
            if *s == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Bipartition { left, right }
    });
    let is_forest = g.edge_count() + components.len() == n;
    StructureInfo {
        bipartition,
        is_tree: is_forest && components.len() == 1,
        is_forest,
        max_degree: g.max_degree(),
        component_count: components.len(),
    }
}
