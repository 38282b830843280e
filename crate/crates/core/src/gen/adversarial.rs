use crate::ec::greedy_ec;
use crate::error::Result;
use crate::exact::oracle_opt;
use crate::graph::WeightedGraph;
use crate::weight::{ratio, Weight};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest edge count the search lets an instance grow to.
pub const ADVERSARIAL_EDGE_LIMIT: usize = 12;

const SIDE: usize = 5;
const MAX_WEIGHT: i64 = 40;
const PATIENCE: usize = 150;

#[derive(Debug, Clone, PartialEq)]
pub struct AdversarialResult {
    pub graph: WeightedGraph,
    pub greedy_weight: Weight,
    pub opt_weight: Weight,
    pub ratio: Weight,
    /// Instances scored, at most the budget.
    pub evaluations: usize,
}

#[derive(Clone)]
struct Candidate {
    edges: Vec<(usize, usize)>,
    weights: Vec<i64>,
}

/// Local search for edge-weighted bipartite graphs (two sides of five
/// vertices, at most [`ADVERSARIAL_EDGE_LIMIT`] edges) on which the greedy
/// edge coloring is far from optimal. Moves re-draw or nudge a weight, add or
/// drop an edge; a move is kept unless it lowers the ratio, and the walk
/// restarts after a long stall. `budget` counts oracle calls.
pub fn adversarial_greedy_search(b: usize, budget: usize, seed: u64) -> Result<AdversarialResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<AdversarialResult> = None;
    let mut evaluations = 0;
    while evaluations < budget {
        let mut cur = random_candidate(&mut rng);
        let mut cur_score = score(&cur, b)?;
        evaluations += 1;
        let mut stall = 0;
        while evaluations < budget && stall < PATIENCE {
            let next = mutate(&cur, &mut rng);
            let s = score(&next, b)?;
            evaluations += 1;
            if s.ratio > cur_score.ratio {
                stall = 0;
            } else {
                stall += 1;
            }
            if s.ratio >= cur_score.ratio {
                cur = next;
                cur_score = s;
            }
            if best.as_ref().is_none_or(|x| cur_score.ratio > x.ratio) {
                best = Some(cur_score.clone());
            }
        }
        if best.as_ref().is_none_or(|x| cur_score.ratio > x.ratio) {
            best = Some(cur_score);
        }
    }
    let mut best = match best {
        Some(b) => b,
        None => score(&random_candidate(&mut rng), b)?,
    };
    best.evaluations = evaluations;
    Ok(best)
}

fn random_candidate(rng: &mut ChaCha8Rng) -> Candidate {
    let mut all: Vec<(usize, usize)> = (0..SIDE).flat_map(|u| (SIDE..2 * SIDE).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    let m = rng.gen_range(ADVERSARIAL_EDGE_LIMIT - 4..=ADVERSARIAL_EDGE_LIMIT);
    let edges = all[..m].to_vec();
    let weights = (0..m).map(|_| rng.gen_range(1..=MAX_WEIGHT)).collect();
    Candidate { edges, weights }
}

fn mutate(c: &Candidate, rng: &mut ChaCha8Rng) -> Candidate {
    let mut next = c.clone();
    let m = next.edges.len();
    match rng.gen_range(0..10) {
        0..=2 => {
            let i = rng.gen_range(0..m);
            next.weights[i] = rng.gen_range(1..=MAX_WEIGHT);
        }
        3..=5 => {
            let i = rng.gen_range(0..m);
            next.weights[i] = (next.weights[i] + rng.gen_range(-3..=3)).clamp(1, MAX_WEIGHT);
        }
        6 | 7 if m < ADVERSARIAL_EDGE_LIMIT => {
            let free: Vec<(usize, usize)> = (0..SIDE)
                .flat_map(|u| (SIDE..2 * SIDE).map(move |v| (u, v)))
                .filter(|e| !next.edges.contains(e))
                .collect();
            next.edges.push(*free.choose(rng).expect("graph is not complete"));
            next.weights.push(rng.gen_range(1..=MAX_WEIGHT));
        }
        _ if m > 1 => {
            let i = rng.gen_range(0..m);
            next.edges.remove(i);
            next.weights.remove(i);
        }
        _ => {}
    }
    next
}

fn score(c: &Candidate, b: usize) -> Result<AdversarialResult> {
    let weights = c.weights.iter().map(|&x| Weight::from_integer(x)).collect();
    let graph = WeightedGraph::edge_weighted(2 * SIDE, c.edges.clone(), weights)?;
    let greedy_weight = greedy_ec(&graph, b)?.total_weight();
    let opt_weight = oracle_opt(&graph, b, ADVERSARIAL_EDGE_LIMIT)?.opt_weight;
    Ok(AdversarialResult {
        ratio: ratio(&greedy_weight, &opt_weight),
        graph,
        greedy_weight,
        opt_weight,
        evaluations: 0,
    })
}
