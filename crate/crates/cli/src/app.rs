//! Subcommands. Exit codes: 0 success, 2 invalid input, 3 guard exceeded,
//! 4 infeasible.

use crate::format::{
    parse_certificate, parse_coloring, parse_instance, write_coloring, write_graph, InstanceFile,
    ParseError,
};
use crate::record::{error_kind, write_csv, RunRecord};
use clap::{Args, Parser, Subcommand, ValueEnum};
use maxcolor_core::exact::{oracle_opt, ListColoringInstance, DEFAULT_SIZE_GUARD};
use maxcolor_core::gen::{
    build_hardness_instance, gen_random, normalize_chain_list_instance, verify_yes_certificate,
    ChainListInstance, GraphKind, RandomSpec, CHAIN_BOUND,
};
use maxcolor_core::weight::format_weight;
use maxcolor_core::{validate_classes, AlgorithmRegistry, Error, Mode, SolveParams};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::GuardExceeded { .. }) => 3,
            CliError::Core(Error::Infeasible(_)) => 4,
            _ => 2,
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "maxcolor", version, about = "Bounded max-coloring of weighted graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Run one algorithm and write its coloring.
    Solve(SolveArgs),
    /// Run several algorithms over instances and emit CSV.
    Compare(CompareArgs),
    /// Build the weighted tree for an edge list-coloring instance on paths.
    Reduce(ReduceArgs),
    /// Check a coloring file against an instance.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Tree,
    Bipartite,
    General,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Vertex,
    Edge,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Vertices; the left side for bipartite graphs.
    #[arg(long)]
    pub n: usize,
    /// Right side of a bipartite graph.
    #[arg(long, default_value_t = 0)]
    pub right: usize,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long, value_enum, default_value = "vertex")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1)]
    pub wmin: i64,
    #[arg(long, default_value_t = 1)]
    pub wmax: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct AlgParams {
    #[arg(long)]
    pub b: usize,
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long)]
    pub k: Option<usize>,
    /// Size guard for exhaustive steps.
    #[arg(long, env = "MAXCOLOR_GUARD")]
    pub guard: Option<usize>,
}

impl AlgParams {
    fn solve_params(&self) -> SolveParams {
        SolveParams {
            b: self.b,
            p: self.p,
            k: self.k,
            guard: self.guard,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub alg: String,
    #[command(flatten)]
    pub params: AlgParams,
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub algs: Vec<String>,
    #[command(flatten)]
    pub params: AlgParams,
    /// Also solve exactly and report ratios.
    #[arg(long)]
    pub oracle: bool,
    /// Add a wall-time column; output is then no longer reproducible.
    #[arg(long)]
    pub timing: bool,
    #[arg(short, long, required = true, num_args = 1..)]
    pub input: Vec<PathBuf>,
    /// CSV destination; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub output: PathBuf,
    /// One color per source edge, numbered from 1.
    #[arg(long, requires = "coloring_out")]
    pub certificate: Option<PathBuf>,
    /// Where to write the tree coloring derived from the certificate.
    #[arg(long, requires = "certificate")]
    pub coloring_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(short, long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub b: usize,
}

pub fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Compare(a) => compare(a),
        Command::Reduce(a) => reduce(a),
        Command::Verify(a) => verify(a),
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load(path: &Path) -> CliResult<InstanceFile> {
    parse_instance(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

fn gen(a: GenArgs) -> CliResult {
    let kind = match a.kind {
        KindArg::Tree => GraphKind::Tree,
        KindArg::Bipartite => GraphKind::Bipartite,
        KindArg::General => GraphKind::General,
    };
    let spec = RandomSpec {
        kind,
        mode: match a.mode {
            ModeArg::Vertex => Mode::Vertex,
            ModeArg::Edge => Mode::Edge,
        },
        n: a.n,
        right: a.right,
        density: if kind == GraphKind::Tree { 0.0 } else { a.density },
        weight_min: a.wmin,
        weight_max: a.wmax,
        seed: a.seed,
    };
    let inst = gen_random(&spec)?;
    write(&a.output, &write_graph(&inst.graph))?;
    println!(
        "wrote {} vertices, {} edges to {}",
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        a.output.display()
    );
    Ok(())
}

fn solve(a: SolveArgs) -> CliResult {
    let inst = load(&a.input)?;
    let registry = AlgorithmRegistry::with_builtins();
    let alg = registry.get(&a.alg)?;
    let coloring = alg.solve(&inst.graph, &a.params.solve_params())?;
    write(&a.output, &write_coloring(&coloring))?;
    println!(
        "{}: weight {} with {} classes",
        alg.name(),
        format_weight(&coloring.total_weight()),
        coloring.class_count()
    );
    Ok(())
}

fn compare(a: CompareArgs) -> CliResult {
    let registry = AlgorithmRegistry::with_builtins();
    let algs = a.algs.iter().map(|n| registry.get(n)).collect::<Result<Vec<_>, _>>()?;
    let params = a.params.solve_params();
    let mut records = Vec::new();
    for path in &a.input {
        let inst = load(path)?;
        let id = path.display().to_string();
        let opt = if a.oracle {
            match oracle_opt(&inst.graph, params.b, params.guard.unwrap_or(DEFAULT_SIZE_GUARD)) {
                Ok(r) => Some(r),
                Err(Error::GuardExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            }
        } else {
            None
        };
        for alg in &algs {
            let start = Instant::now();
            let result = alg.solve(&inst.graph, &params);
            let elapsed = start.elapsed().as_micros();
            let (status, weight, classes) = match &result {
                Ok(c) => ("ok".to_string(), Some(c.total_weight()), Some(c.class_count())),
                Err(e) => (error_kind(e).to_string(), None, None),
            };
            records.push(RunRecord {
                instance: id.clone(),
                algorithm: alg.name().to_string(),
                b: params.b,
                status,
                weight,
                classes,
                opt: opt.as_ref().map(|o| o.opt_weight),
                opt_classes: opt.as_ref().map(|o| o.class_count),
                wall_micros: a.timing.then_some(elapsed),
            });
        }
    }
    records.sort_by(|x, y| (&x.instance, &x.algorithm).cmp(&(&y.instance, &y.algorithm)));
    let mut buf = Vec::new();
    write_csv(&mut buf, &records, a.timing).map_err(|e| CliError::Invalid(e.to_string()))?;
    let text = String::from_utf8(buf).expect("csv output is utf-8");
    match &a.output {
        Some(path) => {
            write(path, &text)?;
            println!("wrote {} rows to {}", records.len(), path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

/// Reads a chain instance. Lists of one color or bounds below five are
/// brought to the uniform shape first; the flag reports whether that
/// happened.
fn chain_instance(inst: InstanceFile) -> CliResult<(ChainListInstance, bool)> {
    let g = inst.graph;
    if g.mode() != Mode::Edge {
        return Err(CliError::Invalid("chain instances must use 'mode edge'".into()));
    }
    let k = inst
        .k
        .ok_or_else(|| CliError::Invalid("chain instance needs a 'k' line".into()))?;
    let mut lists = inst.lists;
    lists.resize(g.edge_count(), Vec::new());
    if let Some(e) = lists.iter().position(Vec::is_empty) {
        return Err(CliError::Invalid(format!("edge {e} has no list")));
    }
    let mut bounds: Vec<usize> = inst.bounds.iter().map(|b| b.unwrap_or(CHAIN_BOUND)).collect();
    bounds.resize(k, CHAIN_BOUND);
    let uniform = lists.iter().all(|l| l.len() == 2) && bounds.iter().all(|&b| b == CHAIN_BOUND);
    if uniform {
        let pairs = lists.iter().map(|l| [l[0], l[1]]).collect();
        let edges = g.edges().to_vec();
        Ok((ChainListInstance::new(g.vertex_count(), edges, k, pairs)?, false))
    } else {
        let list_inst = ListColoringInstance::new(g, k, lists, bounds)?;
        Ok((normalize_chain_list_instance(&list_inst)?, true))
    }
}

fn reduce(a: ReduceArgs) -> CliResult {
    let (chains, normalized) = chain_instance(load(&a.input)?)?;
    let out = build_hardness_instance(&chains)?;
    let header = format!(
        "# b_prime {}\n# target_weight {}\n# k {}\n# trees {}\n",
        out.b_prime,
        format_weight(&out.target_weight),
        out.k,
        out.tree_count
    );
    write(&a.output, &(header + &write_graph(&out.tree)))?;
    if normalized {
        println!("normalized to {} colors and {} edges", chains.k(), chains.graph().edge_count());
    }
    println!(
        "tree with {} edges, b' = {}, target weight {}",
        out.tree.edge_count(),
        out.b_prime,
        format_weight(&out.target_weight)
    );
    if let (Some(cert_path), Some(col_path)) = (&a.certificate, &a.coloring_out) {
        if normalized {
            return Err(CliError::Invalid(
                "certificates are only accepted for instances already in uniform shape".into(),
            ));
        }
        let cert = parse_certificate(&read(cert_path)?).map_err(|source| CliError::Parse {
            path: cert_path.clone(),
            source,
        })?;
        let coloring = verify_yes_certificate(&out, &cert)?;
        write(col_path, &write_coloring(&coloring))?;
        println!("certificate maps to weight {}", format_weight(&coloring.total_weight()));
    }
    Ok(())
}

fn verify(a: VerifyArgs) -> CliResult {
    let inst = load(&a.input)?;
    let classes = parse_coloring(&read(&a.coloring)?).map_err(|source| CliError::Parse {
        path: a.coloring.clone(),
        source,
    })?;
    let report = validate_classes(&inst.graph, &classes, a.b);
    if !report.is_valid() {
        let msgs: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Invalid(format!("invalid coloring: {}", msgs.join("; "))));
    }
    println!(
        "valid: weight {} with {} classes",
        format_weight(&report.total_weight),
        classes.len()
    );
    Ok(())
}
