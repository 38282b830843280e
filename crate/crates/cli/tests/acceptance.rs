//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use maxcolor_core::ec::{convert_ec_tree, convert_phase_one, greedy_ec, is_nice, nice_color_count_bounds, setcover_approx, Regime};
use maxcolor_core::exact::{
    list_coloring_decision, min_weight_via_lists, oracle_opt, two_color_list_bounded, OracleResult, ProfileSearch,
};
use maxcolor_core::gen::{
    adversarial_greedy_search, build_hardness_instance, gen_random, verify_yes_certificate, ChainListInstance,
    RandomSpec,
};
use maxcolor_core::vc::{scheme, split, vc_b_bipartite, SchemeParams};
use maxcolor_core::weight::{harmonic, within_three_minus_two_over_sqrt};
use maxcolor_core::{
    validate_classes, validate_coloring, AlgorithmRegistry, Bipartition, Error, Mode, SolveParams, Weight,
    WeightedGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn w(n: i64) -> Weight {
    Weight::from_integer(n)
}

fn oracle(g: &WeightedGraph, b: usize) -> OracleResult {
    oracle_opt(g, b, 12).expect("instances stay within the oracle guard")
}

struct BipartiteCase {
    seed: u64,
    graph: WeightedGraph,
    bip: Bipartition,
}

/// Bipartite vertex-weighted graphs with 2..=12 vertices.
fn bipartite_suite(count: u64, unit: bool) -> Vec<BipartiteCase> {
    (0..count)
        .map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=12);
            let left = rng.gen_range(1..n);
            let density = rng.gen_range(0.0..1.0);
            let wmax = if unit { 1 } else { 30 };
            let inst = gen_random(&RandomSpec::bipartite(left, n - left, density).weights(1, wmax).seed(seed)).unwrap();
            BipartiteCase {
                seed,
                graph: inst.graph,
                bip: inst.bipartition.unwrap(),
            }
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for case in bipartite_suite(600, false) {
        for b in 1..=3 {
            let opt = oracle(&case.graph, b);
            let c = split(&case.graph, &case.bip, b).map_err(|e| e.to_string())?;
            ensure!(validate_coloring(&case.graph, &c, b).is_valid(), "seed {} b {b}: invalid split", case.seed);
            let ws = &opt.class_weights;
            let bound = ws.first().copied().unwrap_or(w(0)) * 2 + ws.iter().skip(1).copied().sum::<Weight>();
            ensure!(c.total_weight() <= bound, "seed {} b {b}: W {} > {}", case.seed, c.total_weight(), bound);
            ensure!(c.class_count() <= opt.class_count + 1, "seed {} b {b}: k {} > k*+1", case.seed, c.class_count());
            checked += 1;
        }
    }
    Ok(format!("{checked} runs"))
}

fn criterion_2() -> Outcome {
    let mut regimes = [0usize; 3];
    let mut runs = 0;
    for seed in 0..600u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1_000 + seed);
        let regime = (seed % 3) as usize;
        let n: usize = match regime {
            0 => rng.gen_range(1..=12),
            1 => rng.gen_range(2..=12),
            _ => rng.gen_range(3..=12),
        };
        let b = match regime {
            0 => rng.gen_range(n..=n + 2),
            1 => rng.gen_range(n.div_ceil(2)..n),
            _ => rng.gen_range(1..=(n - 1) / 2),
        };
        let left = rng.gen_range(0..=n);
        let density = rng.gen_range(0.0..1.0);
        let inst = gen_random(&RandomSpec::bipartite(left, n - left, density).seed(seed)).unwrap();
        let g = inst.graph;
        let c = vc_b_bipartite(&g, &inst.bipartition.unwrap(), b).map_err(|e| e.to_string())?;
        ensure!(validate_coloring(&g, &c, b).is_valid(), "seed {seed}: invalid coloring");
        let k_opt = oracle(&g, b).class_count;
        ensure!(3 * c.class_count() <= 4 * k_opt, "seed {seed} n {n} b {b}: k {} vs k* {k_opt}", c.class_count());
        let r = if n <= b {
            0
        } else if n <= 2 * b {
            1
        } else {
            2
        };
        regimes[r] += 1;
        runs += 1;
    }
    ensure!(regimes.iter().all(|&x| x >= 100), "regime coverage {regimes:?}");
    Ok(format!("{runs} runs, regimes n<=b / b<n<=2b / n>2b = {regimes:?}"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for case in bipartite_suite(600, false) {
        for b in 1..=3 {
            let opt = oracle(&case.graph, b).opt_weight;
            let s = split(&case.graph, &case.bip, b).map_err(|e| e.to_string())?;
            let run = |p| scheme(&case.graph, &case.bip, b, &SchemeParams::new(p, 12).unwrap()).map_err(|e| e.to_string());
            let s1 = run(1)?;
            ensure!(s1 == s, "seed {} b {b}: scheme(1) differs from split", case.seed);
            let s2 = run(2)?;
            let s3 = run(3)?;
            for (p, c) in [(2, &s2), (3, &s3)] {
                ensure!(validate_coloring(&case.graph, c, b).is_valid(), "seed {} b {b} p {p}: invalid", case.seed);
            }
            ensure!(s2.total_weight() * 3 <= opt * 5, "seed {} b {b}: p=2 W {} OPT {opt}", case.seed, s2.total_weight());
            ensure!(s3.total_weight() * 11 <= opt * 17, "seed {} b {b}: p=3 W {} OPT {opt}", case.seed, s3.total_weight());
            checked += 1;
        }
    }
    Ok(format!("{checked} runs, p = 1, 2, 3"))
}

/// Edge-weighted graphs with at most 12 edges; bipartite pool when asked.
fn edge_suite(count: u64, bipartite: bool, salt: u64) -> Vec<WeightedGraph> {
    let mut out = Vec::new();
    let mut seed = salt;
    while out.len() < count as usize {
        seed += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = if bipartite {
            let l = rng.gen_range(1..=5);
            let r = rng.gen_range(1..=5);
            RandomSpec::bipartite(l, r, rng.gen_range(0.1..0.9))
        } else {
            RandomSpec::general(rng.gen_range(2..=7), rng.gen_range(0.1..0.9))
        };
        let g = gen_random(&spec.mode(Mode::Edge).weights(1, 25).seed(seed)).unwrap().graph;
        if (1..=12).contains(&g.edge_count()) {
            out.push(g);
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let mut runs = 0;
    for (bipartite, regime, salt) in [(false, Regime::General, 0), (true, Regime::Bipartite, 10_000)] {
        for (i, g) in edge_suite(300, bipartite, salt).iter().enumerate() {
            for b in [2usize, 4, 9] {
                let c = greedy_ec(g, b).map_err(|e| e.to_string())?;
                ensure!(validate_coloring(g, &c, b).is_valid(), "{regime:?} #{i} b {b}: invalid");
                let opt = oracle(g, b).opt_weight;
                let radicand = if bipartite { b } else { 2 * b } as u64;
                ensure!(
                    within_three_minus_two_over_sqrt(&c.total_weight(), &opt, radicand),
                    "{regime:?} #{i} b {b}: W {} OPT {opt}",
                    c.total_weight()
                );
                let bounds = nice_color_count_bounds(g.edge_count(), g.max_degree(), b, regime);
                ensure!(bounds.contains(c.class_count()), "{regime:?} #{i} b {b}: k {} outside {bounds:?}", c.class_count());
                ensure!(is_nice(g, &c, b), "{regime:?} #{i} b {b}: not nice");
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} runs over general and bipartite pools"))
}

fn criterion_5() -> Outcome {
    let mut runs = 0;
    for seed in 0..600u64 {
        let n = 2 + (seed as usize % 12);
        let g = gen_random(&RandomSpec::tree(n).mode(Mode::Edge).weights(1, 25).seed(seed)).unwrap().graph;
        let ms = convert_phase_one(&g).map_err(|e| e.to_string())?;
        ensure!(ms.len() == g.max_degree(), "seed {seed}: {} matchings, max degree {}", ms.len(), g.max_degree());
        ensure!(ms.iter().all(|m| !m.is_empty()), "seed {seed}: empty matching");
        ensure!(validate_classes(&g, &ms, usize::MAX).is_valid(), "seed {seed}: matchings not proper");
        for b in 1..=3 {
            let c = convert_ec_tree(&g, b).map_err(|e| e.to_string())?;
            ensure!(validate_coloring(&g, &c, b).is_valid(), "seed {seed} b {b}: invalid");
            let opt = oracle(&g, b).opt_weight;
            ensure!(c.total_weight() <= opt * 2, "seed {seed} b {b}: W {} OPT {opt}", c.total_weight());
            runs += 1;
        }
    }
    Ok(format!("{runs} runs"))
}

fn criterion_6() -> Outcome {
    let mut runs = 0;
    for (mode, salt) in [(Mode::Vertex, 0u64), (Mode::Edge, 50_000)] {
        let mut seed = salt;
        let mut made = 0;
        while made < 300 {
            seed += 1;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=10);
            let g = gen_random(&RandomSpec::general(n, rng.gen_range(0.0..0.8)).mode(mode).weights(1, 25).seed(seed))
                .unwrap()
                .graph;
            if g.item_count() == 0 || g.item_count() > 10 {
                continue;
            }
            made += 1;
            for b in [2usize, 3] {
                let c = setcover_approx(&g, b, 200_000).map_err(|e| e.to_string())?;
                ensure!(validate_coloring(&g, &c, b).is_valid(), "{mode} seed {seed} b {b}: invalid");
                let opt = oracle(&g, b).opt_weight;
                ensure!(c.total_weight() <= harmonic(b) * opt, "{mode} seed {seed} b {b}: W {} OPT {opt}", c.total_weight());
                runs += 1;
            }
        }
    }
    Ok(format!("{runs} runs in both modes"))
}

fn exhaustive_two_color(g: &WeightedGraph, lists: &[Vec<usize>], b1: usize, b2: usize) -> bool {
    let m = g.item_count();
    (0u32..1 << m).any(|mask| {
        let color = |i: usize| (mask >> i & 1) as usize;
        let ones = mask.count_ones() as usize;
        m - ones <= b1
            && ones <= b2
            && (0..m).all(|i| lists[i].contains(&color(i)))
            && (0..m).all(|i| g.conflicts(i).iter().all(|&j| color(i) != color(j)))
    })
}

fn criterion_7() -> Outcome {
    let mut oracle_runs = 0;
    for seed in 0..400u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mode = if seed % 2 == 0 { Mode::Vertex } else { Mode::Edge };
        let n = rng.gen_range(1..=8);
        let g = gen_random(&RandomSpec::general(n, rng.gen_range(0.0..1.0)).mode(mode).weights(1, 6).seed(seed))
            .unwrap()
            .graph;
        if g.item_count() > 8 {
            continue;
        }
        for b in 1..=3 {
            let a = oracle(&g, b);
            let by_lists = min_weight_via_lists(&g, b, &ProfileSearch::default())
                .map_err(|e| e.to_string())?
                .ok_or(format!("seed {seed}: no profile feasible"))?;
            ensure!(a.opt_weight == by_lists.opt_weight, "seed {seed} b {b}: {} vs {}", a.opt_weight, by_lists.opt_weight);
            oracle_runs += 1;
        }
    }
    let mut two = 0;
    let mut feasible = 0;
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(7_000 + seed);
        let n = rng.gen_range(1..=9);
        let g = gen_random(&RandomSpec::general(n, rng.gen_range(0.0..0.6)).seed(seed)).unwrap().graph;
        let lists: Vec<Vec<usize>> = (0..n)
            .map(|_| match rng.gen_range(0..4) {
                0 => vec![0],
                1 => vec![1],
                _ => vec![0, 1],
            })
            .collect();
        let b1 = rng.gen_range(1..=n);
        let b2 = rng.gen_range(1..=n);
        let got = two_color_list_bounded(&g, &lists, b1, b2).map_err(|e| e.to_string())?;
        let expect = exhaustive_two_color(&g, &lists, b1, b2);
        ensure!(got.is_some() == expect, "seed {seed}: two-color decision {} vs exhaustive {expect}", got.is_some());
        if let Some(a) = got {
            let ones = a.iter().filter(|&&c| c == 1).count();
            ensure!(n - ones <= b1 && ones <= b2, "seed {seed}: bounds broken");
            ensure!((0..n).all(|i| lists[i].contains(&a[i])), "seed {seed}: list broken");
            ensure!((0..n).all(|i| g.conflicts(i).iter().all(|&j| a[i] != a[j])), "seed {seed}: conflict");
            feasible += 1;
        }
        two += 1;
    }
    Ok(format!("{oracle_runs} oracle/list agreements, {two} two-color checks ({feasible} feasible)"))
}

/// Every chain instance with at most two edges over `k` colors.
fn small_chain_instances(k: usize) -> Vec<ChainListInstance> {
    let pairs: Vec<[usize; 2]> = (0..k).flat_map(|a| (a + 1..k).map(move |b| [a, b])).collect();
    let mut out = vec![ChainListInstance::new(0, vec![], k, vec![]).unwrap()];
    for &l in &pairs {
        out.push(ChainListInstance::new(2, vec![(0, 1)], k, vec![l]).unwrap());
    }
    for &l1 in &pairs {
        for &l2 in &pairs {
            out.push(ChainListInstance::new(3, vec![(0, 1), (1, 2)], k, vec![l1, l2]).unwrap());
            out.push(ChainListInstance::new(4, vec![(0, 1), (2, 3)], k, vec![l1, l2]).unwrap());
        }
    }
    out
}

fn all_certificates(inst: &ChainListInstance) -> Vec<Vec<usize>> {
    let m = inst.lists().len();
    (0u32..1 << m)
        .map(|mask| (0..m).map(|e| inst.lists()[e][(mask >> e & 1) as usize]).collect())
        .collect()
}

/// Exact search for a tree coloring of weight at most the target.
fn reaches_target(out: &maxcolor_core::gen::ReductionOutput) -> Result<Option<Weight>, String> {
    let limits = ProfileSearch {
        max_classes: None,
        budget: Some(out.target_weight),
        item_guard: usize::MAX,
        profile_guard: 1_000_000,
    };
    Ok(min_weight_via_lists(&out.tree, out.b_prime, &limits)
        .map_err(|e| e.to_string())?
        .map(|r| r.opt_weight))
}

fn criterion_8() -> Outcome {
    let (mut yes, mut no, mut certs, mut degenerate) = (0, 0, 0, 0);
    let mut cases: Vec<ChainListInstance> = small_chain_instances(2);
    cases.extend(small_chain_instances(3));
    // Tighter bounds give the only no-instances this small.
    for edges in [vec![(0, 1), (1, 2), (2, 3)], vec![(0, 1), (2, 3), (4, 5)]] {
        for lists in [vec![[0, 1]; 3], vec![[0, 1], [1, 2], [0, 2]], vec![[0, 1], [0, 2], [0, 1]]] {
            for bound in [1, 2] {
                cases.push(ChainListInstance::with_bound(6, edges.clone(), 3, lists.clone(), bound).unwrap());
            }
        }
    }
    for inst in &cases {
        let out = build_hardness_instance(inst).map_err(|e| e.to_string())?;
        let source = inst.to_list_instance().map_err(|e| e.to_string())?;
        let is_yes = list_coloring_decision(&source, usize::MAX).map_err(|e| e.to_string())?.is_some();
        let forcing = out.star_count() > 0 && (0..out.k).all(|c| out.stars().any(|s| s.color == c));
        for cert in all_certificates(inst) {
            let mapped = verify_yes_certificate(&out, &cert);
            if source.accepts(&cert) {
                let c = mapped.map_err(|e| format!("{inst:?} {cert:?}: {e}"))?;
                ensure!(validate_coloring(&out.tree, &c, out.b_prime).is_valid(), "{cert:?}: invalid mapped coloring");
                if forcing {
                    ensure!(c.total_weight() == out.target_weight, "{inst:?} {cert:?}: weight {} target {}", c.total_weight(), out.target_weight);
                } else {
                    ensure!(c.total_weight() <= out.target_weight, "{inst:?} {cert:?}: weight above target");
                }
                certs += 1;
            } else {
                ensure!(matches!(mapped, Err(Error::InvalidCertificate(_))), "{inst:?} {cert:?}: bad certificate accepted");
            }
        }
        let best = reaches_target(&out)?;
        if is_yes {
            ensure!(best.is_some(), "{inst:?}: yes-instance but no tree coloring within target");
            yes += 1;
        } else {
            ensure!(best.is_none(), "{inst:?}: no-instance but tree coloring of weight {:?}", best);
            no += 1;
        }
        if !forcing {
            degenerate += 1;
        }
    }
    ensure!(no > 0, "no no-instances exercised");
    Ok(format!(
        "{} instances ({yes} yes, {no} no), {certs} certificates mapped; {degenerate} two-color instances without gadgets checked for weight <= target",
        cases.len()
    ))
}

fn run_cli(dir: &Path, args: &[&str]) -> Result<(Option<i32>, Vec<u8>), String> {
    let o = Command::new(env!("CARGO_BIN_EXE_maxcolor"))
        .current_dir(dir)
        .env_remove("MAXCOLOR_GUARD")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((o.status.code(), o.stdout))
}

fn criterion_9() -> Outcome {
    let registry = AlgorithmRegistry::with_builtins();
    let mut runs = 0;
    for seed in 0..40u64 {
        let vertex = gen_random(&RandomSpec::bipartite(4, 4, 0.4).weights(1, 20).seed(seed)).unwrap().graph;
        let unit = gen_random(&RandomSpec::bipartite(4, 4, 0.4).seed(seed)).unwrap().graph;
        let tree = gen_random(&RandomSpec::tree(9).mode(Mode::Edge).weights(1, 20).seed(seed)).unwrap().graph;
        let vtree = gen_random(&RandomSpec::tree(8).weights(1, 20).seed(seed)).unwrap().graph;
        for alg in registry.iter() {
            let g = match alg.name() {
                "greedy" | "convert" => &tree,
                "vcb" => &unit,
                "tree-exact" => &vtree,
                _ => &vertex,
            };
            let params = SolveParams {
                k: Some(4),
                ..SolveParams::new(2)
            };
            let a = alg.solve(g, &params);
            let b = alg.solve(g, &params);
            ensure!(a.is_ok(), "{} failed on seed {seed}: {:?}", alg.name(), a);
            ensure!(format!("{a:?}") == format!("{b:?}"), "{} differs on seed {seed}", alg.name());
            runs += 1;
        }
        let spec = RandomSpec::general(8, 0.5).mode(Mode::Edge).weights(1, 9).seed(seed);
        ensure!(gen_random(&spec).unwrap() == gen_random(&spec).unwrap(), "generator differs on seed {seed}");
    }
    let adv = |s| adversarial_greedy_search(3, 300, s).unwrap();
    ensure!(adv(4) == adv(4), "adversarial search differs");

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    std::fs::write(d.join("chains.txt"), "mode edge\nvertices 4\ne 0 1\ne 1 2\nk 3\nlist 0 1 2\nlist 1 2 3\n").unwrap();
    std::fs::write(d.join("cert.txt"), "1 2\n").unwrap();
    let commands: Vec<Vec<&str>> = vec![
        vec!["gen", "--kind", "bipartite", "--n", "4", "--right", "5", "--density", "0.5", "--wmin", "1", "--wmax", "30", "--seed", "9", "-o", "v.txt"],
        vec!["gen", "--kind", "bipartite", "--n", "4", "--right", "5", "--density", "0.5", "--seed", "9", "-o", "u.txt"],
        vec!["gen", "--kind", "tree", "--n", "9", "--wmin", "1", "--wmax", "30", "--seed", "9", "-o", "vt.txt"],
        vec!["gen", "--kind", "tree", "--n", "10", "--mode", "edge", "--wmin", "1", "--wmax", "30", "--seed", "9", "-o", "t.txt"],
        vec!["solve", "--alg", "split", "--b", "2", "-i", "v.txt", "-o", "s1.txt"],
        vec!["solve", "--alg", "vcb", "--b", "2", "-i", "u.txt", "-o", "s2.txt"],
        vec!["solve", "--alg", "tree-exact", "--k", "3", "--b", "3", "-i", "vt.txt", "-o", "s8.txt"],
        vec!["solve", "--alg", "scheme", "--p", "3", "--b", "2", "-i", "v.txt", "-o", "s3.txt"],
        vec!["solve", "--alg", "setcover", "--b", "2", "-i", "v.txt", "-o", "s4.txt"],
        vec!["solve", "--alg", "oracle", "--b", "2", "-i", "v.txt", "-o", "s5.txt"],
        vec!["solve", "--alg", "greedy", "--b", "2", "-i", "t.txt", "-o", "s6.txt"],
        vec!["solve", "--alg", "convert", "--b", "2", "-i", "t.txt", "-o", "s7.txt"],
        vec!["compare", "--algs", "split,vcb,scheme,setcover,oracle", "--oracle", "--b", "2", "-i", "v.txt", "u.txt"],
        vec!["compare", "--algs", "greedy,convert", "--oracle", "--b", "3", "-i", "t.txt", "-o", "cmp.csv"],
        vec!["reduce", "-i", "chains.txt", "-o", "tree.txt", "--certificate", "cert.txt", "--coloring-out", "tc.txt"],
        vec!["verify", "-i", "v.txt", "-c", "s1.txt", "--b", "2"],
        vec!["verify", "-i", "tree.txt", "-c", "tc.txt", "--b", "13"],
    ];
    let outputs = ["v.txt", "u.txt", "vt.txt", "t.txt", "s8.txt", "s1.txt", "s2.txt", "s3.txt", "s4.txt", "s5.txt", "s6.txt", "s7.txt", "cmp.csv", "tree.txt", "tc.txt"];
    let mut rounds = Vec::new();
    for _ in 0..2 {
        let mut transcript = Vec::new();
        for cmd in &commands {
            let (code, out) = run_cli(d, cmd)?;
            ensure!(code == Some(0), "`{}` exited with {code:?}", cmd.join(" "));
            transcript.push(out);
        }
        for f in outputs {
            transcript.push(std::fs::read(d.join(f)).map_err(|e| format!("{f}: {e}"))?);
        }
        rounds.push(transcript);
    }
    ensure!(rounds[0] == rounds[1], "CLI outputs differ between runs");
    Ok(format!("{runs} algorithm runs, generators, {} CLI commands byte-identical", commands.len()))
}

fn criterion_10() -> Outcome {
    let mut report = Vec::new();
    for (b, budget) in [(1usize, 2_000usize), (2, 5_000), (4, 5_000), (9, 20_000)] {
        let r = adversarial_greedy_search(b, budget, 0).map_err(|e| e.to_string())?;
        ensure!(
            within_three_minus_two_over_sqrt(&r.greedy_weight, &r.opt_weight, b as u64),
            "b {b}: ratio {} exceeds 3 - 2/sqrt(b)",
            r.ratio
        );
        if b == 1 {
            ensure!(r.ratio == w(1), "b 1: ratio {}", r.ratio);
        }
        if b == 9 {
            ensure!(r.ratio > Weight::new(3, 2), "b 9: best ratio {} not above 3/2", r.ratio);
        }
        report.push(format!("b={b}: {} ({} evals)", r.ratio, r.evaluations));
    }
    Ok(report.join(", "))
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("1 split ratio and color count", criterion_1),
        ("2 unit-weight 4/3", criterion_2),
        ("3 scheme ratios", criterion_3),
        ("4 greedy ratios and nice solutions", criterion_4),
        ("5 convert ratio", criterion_5),
        ("6 set-cover ratio", criterion_6),
        ("7 oracle cross-validation", criterion_7),
        ("8 reduction soundness", criterion_8),
        ("9 determinism", criterion_9),
        ("10 adversarial greedy search", criterion_10),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail}; {secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail}; {secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
