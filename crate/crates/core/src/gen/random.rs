use crate::error::{Error, Result};
use crate::graph::{Bipartition, Mode, WeightedGraph};
use crate::weight::Weight;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Tree,
    Bipartite,
    General,
}

/// Parameters for [`gen_random`]. Built with [`RandomSpec::tree`],
/// [`RandomSpec::bipartite`] or [`RandomSpec::general`].
#[derive(Debug, Clone, PartialEq)]
pub struct RandomSpec {
    pub kind: GraphKind,
    pub mode: Mode,
    /// Vertices for trees and general graphs; left side for bipartite.
    pub n: usize,
    /// Right side, bipartite only.
    pub right: usize,
    /// Edge probability, ignored for trees.
    pub density: f64,
    /// Inclusive integer weight range.
    pub weight_min: i64,
    pub weight_max: i64,
    pub seed: u64,
}

impl RandomSpec {
    fn base(kind: GraphKind, n: usize, right: usize, density: f64) -> Self {
        RandomSpec {
            kind,
            mode: Mode::Vertex,
            n,
            right,
            density,
            weight_min: 1,
            weight_max: 1,
            seed: 0,
        }
    }

    pub fn tree(n: usize) -> Self {
        Self::base(GraphKind::Tree, n, 0, 0.0)
    }

    pub fn bipartite(left: usize, right: usize, density: f64) -> Self {
        Self::base(GraphKind::Bipartite, left, right, density)
    }

    pub fn general(n: usize, density: f64) -> Self {
        Self::base(GraphKind::General, n, 0, density)
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn weights(mut self, min: i64, max: i64) -> Self {
        self.weight_min = min;
        self.weight_max = max;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomInstance {
    pub graph: WeightedGraph,
    /// Set for the bipartite kind: left is `0..n`, right is `n..n+right`.
    pub bipartition: Option<Bipartition>,
}

/// Random instance, deterministic in `spec.seed`. Trees are uniform over
/// labeled trees (Prüfer sequences).
pub fn gen_random(spec: &RandomSpec) -> Result<RandomInstance> {
    if !(0.0..=1.0).contains(&spec.density) {
        return Err(Error::param(format!("density {} outside [0, 1]", spec.density)));
    }
    if spec.weight_min < 1 || spec.weight_min > spec.weight_max {
        return Err(Error::param(format!(
            "weight range [{}, {}] must be positive and non-empty",
            spec.weight_min, spec.weight_max
        )));
    }
    if spec.kind != GraphKind::Bipartite && spec.right != 0 {
        return Err(Error::param("right side size is only meaningful for bipartite graphs"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (n, edges, bipartition) = match spec.kind {
        GraphKind::Tree => (spec.n, random_tree(spec.n, &mut rng), None),
        GraphKind::General => {
            let mut edges = Vec::new();
            for u in 0..spec.n {
                for v in u + 1..spec.n {
                    if rng.gen_bool(spec.density) {
                        edges.push((u, v));
                    }
                }
            }
            (spec.n, edges, None)
        }
        GraphKind::Bipartite => {
            let (l, r) = (spec.n, spec.right);
            let mut edges = Vec::new();
            for u in 0..l {
                for v in l..l + r {
                    if rng.gen_bool(spec.density) {
                        edges.push((u, v));
                    }
                }
            }
            let bp = Bipartition {
                left: (0..l).collect(),
                right: (l..l + r).collect(),
            };
            (l + r, edges, Some(bp))
        }
    };
    let items = match spec.mode {
        Mode::Vertex => n,
        Mode::Edge => edges.len(),
    };
    let weights = (0..items)
        .map(|_| Weight::from_integer(rng.gen_range(spec.weight_min..=spec.weight_max)))
        .collect();
    let graph = WeightedGraph::new(spec.mode, n, edges, weights)?;
    Ok(RandomInstance { graph, bipartition })
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}
