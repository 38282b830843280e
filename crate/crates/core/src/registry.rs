//! Named algorithms behind one trait, for selection at run time.

use crate::coloring::Coloring;
use crate::ec::{convert_ec_tree, greedy_ec, setcover_approx, DEFAULT_SUBSET_GUARD};
use crate::error::{Error, Result};
use crate::exact::{oracle_opt, DEFAULT_SIZE_GUARD};
use crate::graph::{structure_probe, Bipartition, WeightedGraph};
use crate::vc::{scheme, split, tree_exact_fixed_k, vc_b_bipartite, SchemeParams, DEFAULT_COMBINATION_GUARD};
use std::collections::BTreeMap;

/// Inputs shared by all algorithms. Each one reads what it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveParams {
    pub b: usize,
    /// Scheme parameter.
    pub p: usize,
    /// Color count for `tree-exact`.
    pub k: Option<usize>,
    /// Overrides the algorithm's own size guard.
    pub guard: Option<usize>,
}

impl SolveParams {
    pub fn new(b: usize) -> Self {
        SolveParams {
            b,
            p: 2,
            k: None,
            guard: None,
        }
    }
}

pub trait ColoringAlgorithm: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn solve(&self, g: &WeightedGraph, params: &SolveParams) -> Result<Coloring>;
}

fn bipartition(g: &WeightedGraph) -> Result<Bipartition> {
    structure_probe(g)
        .bipartition
        .ok_or_else(|| Error::InvalidStructure("graph is not bipartite".into()))
}

struct Split;
struct Vcb;
struct Scheme;
struct Greedy;
struct Convert;
struct SetCover;
struct TreeExact;
struct Oracle;

impl ColoringAlgorithm for Split {
    fn name(&self) -> &'static str {
        "split"
    }
    fn description(&self) -> &'static str {
        "bipartite vertex coloring, each side partitioned separately"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        split(g, &bipartition(g)?, p.b)
    }
}

impl ColoringAlgorithm for Vcb {
    fn name(&self) -> &'static str {
        "vcb"
    }
    fn description(&self) -> &'static str {
        "unit-weight bipartite vertex coloring, 4/3 of the optimal color count"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        vc_b_bipartite(g, &bipartition(g)?, p.b)
    }
}

impl ColoringAlgorithm for Scheme {
    fn name(&self) -> &'static str {
        "scheme"
    }
    fn description(&self) -> &'static str {
        "bipartite vertex coloring, exact on the heaviest b(p-1) vertices"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        let params = SchemeParams::new(p.p, p.guard.unwrap_or(DEFAULT_SIZE_GUARD))?;
        scheme(g, &bipartition(g)?, p.b, &params)
    }
}

impl ColoringAlgorithm for Greedy {
    fn name(&self) -> &'static str {
        "greedy"
    }
    fn description(&self) -> &'static str {
        "first-fit edge coloring in weight order"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        greedy_ec(g, p.b)
    }
}

impl ColoringAlgorithm for Convert {
    fn name(&self) -> &'static str {
        "convert"
    }
    fn description(&self) -> &'static str {
        "tree edge coloring via max-degree matchings"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        convert_ec_tree(g, p.b)
    }
}

impl ColoringAlgorithm for SetCover {
    fn name(&self) -> &'static str {
        "setcover"
    }
    fn description(&self) -> &'static str {
        "greedy weighted set cover over classes of at most b items"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        setcover_approx(g, p.b, p.guard.unwrap_or(DEFAULT_SUBSET_GUARD))
    }
}

impl ColoringAlgorithm for TreeExact {
    fn name(&self) -> &'static str {
        "tree-exact"
    }
    fn description(&self) -> &'static str {
        "optimal vertex coloring of a forest with at most k colors"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        let k = p.k.ok_or_else(|| Error::InvalidParameter("tree-exact needs k".into()))?;
        tree_exact_fixed_k(g, p.b, k, p.guard.unwrap_or(DEFAULT_COMBINATION_GUARD))?
            .ok_or_else(|| Error::Infeasible(format!("no coloring with at most {k} colors")))
    }
}

impl ColoringAlgorithm for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }
    fn description(&self) -> &'static str {
        "exact branch and bound, small instances only"
    }
    fn solve(&self, g: &WeightedGraph, p: &SolveParams) -> Result<Coloring> {
        Ok(oracle_opt(g, p.b, p.guard.unwrap_or(DEFAULT_SIZE_GUARD))?.witness)
    }
}

pub struct AlgorithmRegistry {
    algorithms: BTreeMap<&'static str, Box<dyn ColoringAlgorithm>>,
}

impl AlgorithmRegistry {
    pub fn empty() -> Self {
        AlgorithmRegistry {
            algorithms: BTreeMap::new(),
        }
    }

    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Split));
        r.register(Box::new(Vcb));
        r.register(Box::new(Scheme));
        r.register(Box::new(Greedy));
        r.register(Box::new(Convert));
        r.register(Box::new(SetCover));
        r.register(Box::new(TreeExact));
        r.register(Box::new(Oracle));
        r
    }

    /// Replaces any algorithm of the same name.
    pub fn register(&mut self, alg: Box<dyn ColoringAlgorithm>) {
        self.algorithms.insert(alg.name(), alg);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ColoringAlgorithm> {
        self.algorithms.get(name).map(|a| a.as_ref()).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "unknown algorithm '{name}', expected one of: {}",
                self.names().join(", ")
            ))
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.algorithms.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ColoringAlgorithm> {
        self.algorithms.values().map(|a| a.as_ref())
    }
}

impl Default for AlgorithmRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}
