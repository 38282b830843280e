use super::chains::ChainListInstance;
use crate::coloring::{validate_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// All structural weights are doubled so the connecting edges can weigh 1.
const SCALE: i64 = 2;

/// A star hanging off a gadget vertex: the connection edge of weight `q`
/// and `k - 1` further edges carrying the other weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: usize,
    pub connection: usize,
    /// Color of the connection edge, 0-based.
    pub color: usize,
    pub leaves: Vec<usize>,
}

/// Replacement of one source edge `(u, v)` by the path `u - u' - v' - v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGadget {
    pub source_edge: usize,
    /// Tree edges `(u, u')`, `(u', v')`, `(v', v)`.
    pub chain: [usize; 3],
    pub u_prime: usize,
    pub v_prime: usize,
    pub stars: Vec<Star>,
}

/// Filler for a color that appears in fewer lists than the most frequent
/// one: an edge `(x, y)` of that color's weight with `k - 1` stars at `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorGadget {
    pub color: usize,
    pub x: usize,
    pub y: usize,
    pub edge: usize,
    pub stars: Vec<Star>,
}

/// The tree instance built from a chain list instance. Color `c` (0-based)
/// weighs `2(c + 1)`, source path edges weigh 2 and the connecting edges
/// weigh `epsilon = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub tree: WeightedGraph,
    pub b_prime: usize,
    pub k: usize,
    pub target_weight: Weight,
    pub edge_gadgets: Vec<EdgeGadget>,
    /// Grouped by color, ascending.
    pub color_gadgets: Vec<ColorGadget>,
    pub frequencies: Vec<usize>,
    /// Largest frequency, at least 1.
    pub max_frequency: usize,
    /// Number of trees before they are joined.
    pub tree_count: usize,
    pub connecting_edges: Vec<usize>,
    pub epsilon: Weight,
    pub source: ChainListInstance,
}

impl ReductionOutput {
    pub fn stars(&self) -> impl Iterator<Item = &Star> {
        self.edge_gadgets
            .iter()
            .flat_map(|g| g.stars.iter())
            .chain(self.color_gadgets.iter().flat_map(|g| g.stars.iter()))
    }

    pub fn star_count(&self) -> usize {
        self.stars().count()
    }

    /// Weight of color `c` in the output tree.
    pub fn color_weight(&self, c: usize) -> Weight {
        Weight::from_integer(SCALE * (c as i64 + 1))
    }
}

struct Builder {
    k: usize,
    next_vertex: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<Weight>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.next_vertex += 1;
        self.next_vertex - 1
    }

    fn edge(&mut self, u: usize, v: usize, w: i64) -> usize {
        self.edges.push((u, v));
        self.weights.push(Weight::from_integer(w));
        self.edges.len() - 1
    }

    fn color_edge(&mut self, u: usize, v: usize, c: usize) -> usize {
        self.edge(u, v, SCALE * (c as i64 + 1))
    }

    /// One star per color in `colors`, each attached to `at`.
    fn stars(&mut self, at: usize, colors: impl Iterator<Item = usize>) -> Vec<Star> {
        let mut out = Vec::new();
        for q in colors {
            let center = self.vertex();
            let connection = self.color_edge(at, center, q);
            let mut leaves = Vec::new();
            for c in (0..self.k).filter(|&c| c != q) {
                let leaf = self.vertex();
                leaves.push(self.color_edge(center, leaf, c));
            }
            out.push(Star {
                center,
                connection,
                color: q,
                leaves,
            });
        }
        out
    }
}

/// Builds the weighted tree whose optimum reaches `target_weight` exactly
/// when the chain instance has a bounded list coloring.
///
/// Trees before joining: one per path of the source (isolated vertices are
/// dropped), then the color gadgets in color order. Tree `t` is joined to
/// tree `t + 1` by an edge from its largest vertex to the smallest vertex of
/// the next, so the connecting edges form a matching.
pub fn build_hardness_instance(inst: &ChainListInstance) -> Result<ReductionOutput> {
    let src = inst.graph();
    let k = inst.k();
    let frequencies = inst.frequencies();
    let max_frequency = frequencies.iter().copied().max().unwrap_or(0).max(1);
    let mut b = Builder {
        k,
        next_vertex: 0,
        edges: Vec::new(),
        weights: Vec::new(),
    };

    let mut id = vec![usize::MAX; src.vertex_count()];
    for (v, slot) in id.iter_mut().enumerate() {
        if src.degree(v) > 0 {
            *slot = b.vertex();
        }
    }
    let mut trees: Vec<(usize, usize)> = Vec::new();
    let mut edge_gadgets = Vec::with_capacity(src.edge_count());
    let mut tree_of_edge = vec![0; src.edge_count()];
    for comp in src.components().into_iter().filter(|c| c.len() > 1) {
        let t = trees.len();
        trees.push((id[comp[0]], id[comp[0]]));
        for &v in &comp {
            for &e in src.incident_edges(v) {
                tree_of_edge[e] = t;
            }
        }
    }
    for (e, &(u, v)) in src.edges().iter().enumerate() {
        let [i, j] = inst.lists()[e];
        let (up, vp) = (b.vertex(), b.vertex());
        let chain = [
            b.edge(id[u], up, SCALE),
            b.edge(up, vp, SCALE),
            b.edge(vp, id[v], SCALE),
        ];
        let others = || (0..k).filter(move |&c| c != i && c != j);
        let mut stars = b.stars(up, others());
        stars.extend(b.stars(vp, others()));
        let tree = &mut trees[tree_of_edge[e]];
        tree.1 = b.next_vertex - 1;
        edge_gadgets.push(EdgeGadget {
            source_edge: e,
            chain,
            u_prime: up,
            v_prime: vp,
            stars,
        });
    }
    let mut color_gadgets = Vec::new();
    for (c, &f) in frequencies.iter().enumerate() {
        for _ in f..max_frequency {
            let (x, y) = (b.vertex(), b.vertex());
            let edge = b.color_edge(x, y, c);
            let stars = b.stars(y, (0..k).filter(|&q| q != c));
            trees.push((x, b.next_vertex - 1));
            color_gadgets.push(ColorGadget {
                color: c,
                x,
                y,
                edge,
                stars,
            });
        }
    }
    let connecting_edges = trees
        .windows(2)
        .map(|pair| b.edge(pair[0].1, pair[1].0, 1))
        .collect::<Vec<_>>();

    let star_total = k * (k - 1) * max_frequency - 2 * src.edge_count();
    let b_prime = star_total + inst.bound() + max_frequency;
    let structural: i64 = (1..=k as i64).sum::<i64>() * SCALE;
    let extra = connecting_edges.len().div_ceil(b_prime) as i64;
    let tree = WeightedGraph::edge_weighted(b.next_vertex, b.edges, b.weights)?;
    Ok(ReductionOutput {
        tree,
        b_prime,
        k,
        target_weight: Weight::from_integer(structural + extra),
        edge_gadgets,
        color_gadgets,
        frequencies,
        max_frequency,
        tree_count: trees.len(),
        connecting_edges,
        epsilon: Weight::from_integer(1),
        source: inst.clone(),
    })
}

/// Maps a list coloring of the source (one 0-based color per source edge)
/// to a coloring of the tree with at most `b_prime` edges per class.
///
/// Edge `e` colored `i` with list `{i, j}` puts its outer gadget edges in
/// class `i` and its middle edge in class `j`. Every other structural edge
/// goes to the class of its weight, and the connecting edges fill extra
/// classes of `b_prime` each. The total equals `target_weight` whenever
/// each color owns at least one star or color gadget, which holds for
/// `k >= 3`; with `k = 2` and no gadgets it can only be lighter.
pub fn verify_yes_certificate(out: &ReductionOutput, cert: &[usize]) -> Result<Coloring> {
    let src = &out.source;
    let g = src.graph();
    if cert.len() != g.edge_count() {
        return Err(Error::InvalidCertificate(format!(
            "{} colors for {} edges",
            cert.len(),
            g.edge_count()
        )));
    }
    let mut used = vec![0; out.k];
    for (e, &c) in cert.iter().enumerate() {
        if !src.lists()[e].contains(&c) {
            return Err(Error::InvalidCertificate(format!("edge {e}: color {c} not in its list")));
        }
        used[c] += 1;
        if let Some(&f) = g.conflicts(e).iter().find(|&&f| cert[f] == c) {
            return Err(Error::InvalidCertificate(format!("edges {e} and {f} share color {c}")));
        }
    }
    if let Some(c) = used.iter().position(|&u| u > src.bound()) {
        return Err(Error::InvalidCertificate(format!(
            "color {c} used {} times, bound {}",
            used[c],
            src.bound()
        )));
    }

    let mut classes = vec![Vec::new(); out.k];
    for gadget in &out.edge_gadgets {
        let c = cert[gadget.source_edge];
        let [i, j] = src.lists()[gadget.source_edge];
        let other = if c == i { j } else { i };
        classes[c].push(gadget.chain[0]);
        classes[c].push(gadget.chain[2]);
        classes[other].push(gadget.chain[1]);
    }
    for star in out.stars() {
        classes[star.color].push(star.connection);
        for &leaf in &star.leaves {
            let c = (out.tree.weight(leaf).to_integer() / SCALE - 1) as usize;
            classes[c].push(leaf);
        }
    }
    for gadget in &out.color_gadgets {
        classes[gadget.color].push(gadget.edge);
    }
    classes.extend(out.connecting_edges.chunks(out.b_prime).map(<[usize]>::to_vec));

    let coloring = Coloring::from_classes(&out.tree, classes);
    let report = validate_coloring(&out.tree, &coloring, out.b_prime);
    if let Some(v) = report.first_violation() {
        return Err(Error::InvalidCertificate(format!("mapped coloring is invalid: {v}")));
    }
    Ok(coloring)
}
