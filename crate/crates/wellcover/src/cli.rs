//! Command line front end.
//!
//! Answers are only ever reported in the JSON output. Exit codes report
//! failures: 1 a counterexample found by `verify-reduction`, 2 a usage or
//! precondition error, 3 an unreadable or malformed input, 4 an exhausted
//! budget or exceeded size cap.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wellcover_core::gadgets::{
    chvatal_slater, gadget_03, gadget_13, gadget_30, kwc_to_0l, mono_add_clique, mono_lift_r,
    rbds_gadget, stockmeyer, ClaimKind, GadgetOutput, StockmeyerMode,
};
use wellcover_core::oracle::is_well_covered_bruteforce_with;
use wellcover_core::partition::{find_rl_partition_with, nd_decompose};
use wellcover_core::solvers::{recognize_wc_rl_with, wc_via_nd_with, Method};
use wellcover_core::{Budget, Caps, Error, Graph, RlPartition, WcVerdict};

use crate::bench::{self, BenchConfig};
use crate::deadline::Deadline;
use crate::formats::{emit_dimacs_graph, parse_dimacs_cnf, parse_dimacs_graph};
use crate::gen;
use crate::json::{ClaimJson, PartitionJson, RbdsJson, RecognizeJson, VerdictJson};
use crate::sweep::{run_sweep, SweepConfig};

#[derive(Debug, Parser)]
#[command(
    name = "wellcover",
    version,
    about = "Well-covered graph recognition and reduction checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Time limit of each computation, in milliseconds.
    #[arg(long, global = true, env = "WELLCOVER_BUDGET_MS")]
    pub budget_ms: Option<u64>,

    /// Largest vertex count accepted by maximal independent set enumeration.
    #[arg(long, global = true)]
    pub cap_n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Transversal,
    Fpt,
    Nd,
    Special,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a graph is well-covered.
    Wellcovered {
        /// DIMACS edge file.
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Partition JSON for the methods that need one.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Find an `(r, l)`-partition when none is given.
        #[arg(long, requires = "l")]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        l: Option<usize>,
        /// Also report whether every maximal independent set has `k` vertices.
        #[arg(long)]
        k: Option<usize>,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Decide whether a graph is an `(r, l)`-graph and whether it is well-covered.
    Recognize {
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Build a reduction gadget; writes graph.dimacs, partition.json and claim.json.
    Reduce {
        /// chvatal-slater, stockmeyer, 0-3, 3-0, 1-3, mono-clique, mono-lift, rbds or kwc.
        #[arg(long)]
        gadget: ClaimKind,
        /// DIMACS CNF for formula gadgets, RBDS JSON for rbds, DIMACS graph otherwise.
        input: PathBuf,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Add the edge t1t2 to the 3-coloring construction.
        #[arg(long)]
        anchored: bool,
        /// Output directory.
        #[arg(short)]
        o: PathBuf,
    },
    /// Check a gadget's equivalence on every small instance.
    VerifyReduction {
        /// A gadget name, or `all`.
        #[arg(long)]
        gadget: String,
        /// Largest vertex count of the exhaustive graph sweeps.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Number of extra random graphs for kwc.
        #[arg(long, default_value_t = 300)]
        random: usize,
        #[arg(long, default_value_t = 9)]
        random_max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        anchored: bool,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Generate a random graph, `G(n, p)` or with a planted `(r, l)`-partition.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, requires = "l")]
        r: Option<usize>,
        #[arg(long, requires = "r")]
        l: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(short)]
        o: Option<PathBuf>,
        /// Where to write the planted partition. Without it the partition is
        /// written as a `c partition` comment line in the graph file.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Time the exact methods on generated families; CSV output.
    Bench {
        /// Side lengths of the complete bipartite family.
        #[arg(long, value_delimiter = ',', default_value = "8,12,16,20")]
        knn: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "20,40,60")]
        planted: Vec<usize>,
        #[arg(long, default_value_t = 4)]
        planted_max_l: usize,
        #[arg(long, value_delimiter = ',', default_value = "10,14,18")]
        gnp: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Counterexample(String),
    Usage(String),
    Input(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Counterexample(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Budget(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Counterexample(m)
            | CliError::Usage(m)
            | CliError::Input(m)
            | CliError::Budget(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExhausted | Error::CapExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    parse_dimacs_graph(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => write_file(p, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

struct Context {
    caps: Caps,
    budget_ms: Option<u64>,
}

impl Context {
    fn budget(&self) -> Deadline {
        Deadline::from_millis(self.budget_ms)
    }
}

/// Exact verdict by the quotient method when it fits the cap, brute force otherwise.
fn reference_verdict(g: &Graph, caps: &Caps, budget: &mut dyn Budget) -> Result<WcVerdict, Error> {
    if nd_decompose(g).width() <= caps.nd_parts {
        wc_via_nd_with(g, caps, budget)
    } else {
        is_well_covered_bruteforce_with(g, caps, budget)
    }
}

fn wellcovered(
    ctx: &Context,
    g: &Graph,
    method: MethodArg,
    partition: Option<RlPartition>,
    rl: Option<(usize, usize)>,
) -> CliResult<VerdictJson> {
    let mut budget = ctx.budget();
    let n = g.vertex_count();
    let found = |r: usize, l: usize, budget: &mut Deadline| -> CliResult<RlPartition> {
        find_rl_partition_with(g, r, l, budget)?
            .ok_or_else(|| CliError::Usage(format!("the graph has no ({r},{l})-partition")))
    };
    let partition_for = |method: Method, budget: &mut Deadline| -> CliResult<RlPartition> {
        if let Some(p) = &partition {
            return Ok(p.clone());
        }
        match (rl, method) {
            (Some((r, l)), _) => found(r, l, budget),
            (None, Method::Special) => found(0, 2, budget),
            (None, _) => Err(CliError::Usage(format!(
                "method {method} needs --partition or --r/--l"
            ))),
        }
    };
    let method = match method {
        MethodArg::Brute => Method::Brute,
        MethodArg::Transversal => Method::Transversal,
        MethodArg::Fpt => Method::Fpt,
        MethodArg::Nd => Method::Nd,
        MethodArg::Special => Method::Special,
        MethodArg::Auto => {
            if nd_decompose(g).width() <= ctx.caps.nd_parts {
                Method::Nd
            } else if partition.is_some() || rl.is_some() {
                let p = partition_for(Method::Fpt, &mut budget)?;
                if p.independent_union(n).len() <= ctx.caps.fpt_independent {
                    Method::Fpt
                } else {
                    Method::Brute
                }
            } else {
                Method::Brute
            }
        }
    };
    let p = match method {
        Method::Transversal | Method::Fpt | Method::Special => {
            Some(partition_for(method, &mut budget)?)
        }
        Method::Brute | Method::Nd => None,
    };
    if let Some(p) = &p {
        p.check(g)?;
        if method == Method::Transversal && p.r() > 1 {
            return Err(CliError::Usage(
                "the transversal method needs r <= 1".into(),
            ));
        }
        if method == Method::Special && (p.r(), p.l()) != (0, 2) {
            return Err(CliError::Usage(
                "the special method needs a (0,2)-partition".into(),
            ));
        }
    }
    let budget = ctx.budget_ms.map(Duration::from_millis);
    let v = bench::run_method(g, method, p.as_ref(), &ctx.caps, budget)?;
    Ok(VerdictJson::new(&v, method.as_str()))
}

fn build_gadget(
    kind: ClaimKind,
    input: &Path,
    rl: (Option<usize>, Option<usize>),
    mode: StockmeyerMode,
) -> CliResult<GadgetOutput> {
    let out = if kind.takes_formula() {
        let text = read(input)?;
        let f = parse_dimacs_cnf(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?;
        match kind {
            ClaimKind::ChvatalSlater => chvatal_slater(&f),
            ClaimKind::Stockmeyer => stockmeyer(&f, mode),
            ClaimKind::Gadget03 => gadget_03(&f, mode),
            ClaimKind::Gadget30 => gadget_30(&f, mode),
            _ => gadget_13(&f, mode),
        }
    } else if kind == ClaimKind::Rbds {
        let inst: RbdsJson = read_json(input)?;
        rbds_gadget(&inst.to_instance()?)
    } else {
        let g = read_graph(input)?;
        match kind {
            ClaimKind::Kwc => kwc_to_0l(&g),
            _ => {
                let (Some(r), Some(l)) = rl else {
                    return Err(CliError::Usage(format!(
                        "gadget {} needs --r and --l",
                        kind.name()
                    )));
                };
                if kind == ClaimKind::MonoAddClique {
                    Ok(mono_add_clique(&g, r, l))
                } else {
                    mono_lift_r(&g, r, l)
                }
            }
        }
    };
    Ok(out?)
}

/// Runs one command, writing results to `out` unless `-o` redirects them.
pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    let mut caps = Caps::default();
    if let Some(n) = cli.cap_n {
        caps.enum_vertices = n;
    }
    let ctx = Context {
        caps,
        budget_ms: cli.budget_ms,
    };
    match cli.command {
        Command::Wellcovered {
            graph,
            method,
            partition,
            r,
            l,
            k,
            o,
        } => {
            let g = read_graph(&graph)?;
            let partition = match partition {
                Some(path) => {
                    let p: PartitionJson = read_json(&path)?;
                    Some(p.to_partition(g.vertex_count())?)
                }
                None => None,
            };
            let mut verdict = wellcovered(&ctx, &g, method, partition, r.zip(l))?;
            verdict.k_well_covered = k.map(|k| verdict.well_covered && verdict.min == k);
            emit(out, o.as_deref(), &json(&verdict))
        }
        Command::Recognize { graph, r, l, o } => {
            if r + l == 0 {
                return Err(CliError::Usage("need r + l >= 1".into()));
            }
            let g = read_graph(&graph)?;
            let mut budget = ctx.budget();
            let partition = find_rl_partition_with(&g, r, l, &mut budget)?;
            let is_wc = reference_verdict(&g, &ctx.caps, &mut budget)?.well_covered;
            let is_rl_wc = recognize_wc_rl_with(&g, r, l, &ctx.caps, &mut budget)?;
            assert_eq!(
                is_rl_wc,
                partition.is_some() && is_wc,
                "recognition disagrees with its parts"
            );
            let report = RecognizeJson {
                r,
                l,
                is_rl: partition.is_some(),
                is_wc,
                is_rl_wc,
                partition: partition.as_ref().map(PartitionJson::from_partition),
            };
            emit(out, o.as_deref(), &json(&report))
        }
        Command::Reduce {
            gadget,
            input,
            r,
            l,
            anchored,
            o,
        } => {
            let mode = if anchored {
                StockmeyerMode::Anchored
            } else {
                StockmeyerMode::Literal
            };
            let built = build_gadget(gadget, &input, (r, l), mode)?;
            fs::create_dir_all(&o).map_err(|e| CliError::Input(format!("{}: {e}", o.display())))?;
            write_file(&o.join("graph.dimacs"), &emit_dimacs_graph(&built.graph))?;
            let partition = built.partition.as_ref().map(PartitionJson::from_partition);
            write_file(&o.join("partition.json"), &json(&partition))?;
            write_file(&o.join("claim.json"), &json(&ClaimJson::new(&built.claim)))
        }
        Command::VerifyReduction {
            gadget,
            max_n,
            random,
            random_max_n,
            seed,
            anchored,
            o,
        } => {
            if max_n > 6 || random_max_n > 10 {
                return Err(CliError::Usage(
                    "sweep bounds above --max-n 6 or --random-max-n 10 exceed the oracle caps"
                        .into(),
                ));
            }
            let kinds: Vec<ClaimKind> = if gadget == "all" {
                ClaimKind::ALL.to_vec()
            } else {
                vec![gadget.parse::<ClaimKind>()?]
            };
            let cfg = SweepConfig {
                max_n,
                random,
                random_max_n,
                seed,
                mode: if anchored {
                    StockmeyerMode::Anchored
                } else {
                    StockmeyerMode::Literal
                },
                caps: ctx.caps,
            };
            let end = ctx.budget().end();
            let reports = kinds
                .into_iter()
                .map(|k| run_sweep(k, &cfg, end))
                .collect::<Result<Vec<_>, _>>()?;
            let text = if reports.len() == 1 {
                json(&reports[0])
            } else {
                json(&reports)
            };
            emit(out, o.as_deref(), &text)?;
            let failing: Vec<String> = reports
                .iter()
                .filter(|s| s.failed > 0)
                .map(|s| format!("{}: {} of {} instances fail", s.gadget, s.failed, s.total))
                .collect();
            if failing.is_empty() {
                Ok(())
            } else {
                Err(CliError::Counterexample(failing.join("; ")))
            }
        }
        Command::Gen {
            n,
            p,
            r,
            l,
            seed,
            o,
            partition_out,
        } => {
            let mut rng = gen::rng(seed);
            let (g, planted) = match r.zip(l) {
                Some((r, l)) => {
                    let (g, part) = gen::planted(n, r, l, p, &mut rng)?;
                    (g, Some(PartitionJson::from_partition(&part)))
                }
                None => (gen::gnp(n, p, &mut rng)?, None),
            };
            let mut text = String::new();
            if let Some(part) = &planted {
                match &partition_out {
                    Some(path) => write_file(path, &json(part))?,
                    None => {
                        text.push_str("c partition ");
                        text.push_str(&serde_json::to_string(part).expect("serializable"));
                        text.push('\n');
                    }
                }
            }
            text.push_str(&emit_dimacs_graph(&g));
            emit(out, o.as_deref(), &text)
        }
        Command::Bench {
            knn,
            planted,
            planted_max_l,
            gnp,
            reps,
            seed,
            o,
        } => {
            let cfg = BenchConfig {
                knn_sizes: knn,
                planted_sizes: planted,
                planted_max_l,
                gnp_sizes: gnp,
                reps,
                seed,
                budget: ctx.budget_ms.map(Duration::from_millis),
                caps: ctx.caps,
            };
            let rows = bench::run_bench(&cfg)?;
            emit(out, o.as_deref(), &bench::to_csv(&rows))
        }
    }
}
