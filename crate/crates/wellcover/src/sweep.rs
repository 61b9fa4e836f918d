//! Exhaustive and random instance sweeps checking gadget claims.

use std::time::Instant;
use wellcover_core::gadgets::{
    chvatal_slater, gadget_03, gadget_13, gadget_30, kwc_to_0l, mono_add_clique, mono_lift_r,
    rbds_gadget, stockmeyer, verify_gadget_claim, ClaimKind, GadgetOutput, Source, StockmeyerMode,
};

use rand::Rng;
use rayon::prelude::*;
use wellcover_core::{Caps, CnfFormula, Error, Graph, RbdsInstance};

use crate::deadline::Deadline;
use crate::gen;
use crate::json::{InstanceJson, SweepJson};

/// `(r, l)` pairs of the monotonicity sweeps.
pub const MONO_PAIRS: [(usize, usize); 6] = [(1, 0), (1, 1), (2, 0), (0, 1), (0, 2), (2, 1)];

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Largest vertex count of the exhaustive graph sweeps.
    pub max_n: usize,
    /// Number of extra random graphs for the `kwc` sweep.
    pub random: usize,
    /// Largest vertex count of those random graphs.
    pub random_max_n: usize,
    pub seed: u64,
    pub mode: StockmeyerMode,
    pub caps: Caps,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 5,
            random: 300,
            random_max_n: 9,
            seed: 0,
            mode: StockmeyerMode::Literal,
            caps: Caps::default(),
        }
    }
}

/// Every graph on `n` labelled vertices, by edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    })
}

/// Formulas over three variables made of `0..=max_m` distinct clauses out
/// of the eight sign patterns, by clause count and then lexicographically.
pub fn small_formulas(max_m: usize) -> Vec<CnfFormula> {
    let pool = CnfFormula::all_sign_patterns().clauses().to_vec();
    let mut out = Vec::new();
    for m in 0..=max_m {
        let mut pick: Vec<usize> = (0..m).collect();
        loop {
            let clauses = pick.iter().map(|&i| pool[i]).collect();
            out.push(CnfFormula::new(3, clauses).expect("valid clauses"));
            // Next m-combination of 0..8.
            let Some(i) = (0..m).rev().find(|&i| pick[i] < pool.len() - m + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..m {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    out
}

/// Every red-blue incidence pattern with `1..=max_side` vertices per side
/// and `1 <= k <= min(2, |R|)`.
pub fn small_rbds(max_side: usize, max_k: usize) -> Vec<RbdsInstance> {
    let mut out = Vec::new();
    for red in 1..=max_side {
        for blue in 1..=max_side {
            let pairs: Vec<(usize, usize)> = (0..red)
                .flat_map(|r| (0..blue).map(move |b| (r, b)))
                .collect();
            for mask in 0u64..1 << pairs.len() {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                for k in 1..=max_k.min(red) {
                    out.push(
                        RbdsInstance::new(red, blue, edges.clone(), k).expect("valid instance"),
                    );
                }
            }
        }
    }
    out
}

fn describe_formula(f: &CnfFormula) -> String {
    let clauses: Vec<String> = f
        .clauses()
        .iter()
        .map(|[a, b, c]| format!("({a} {b} {c})"))
        .collect();
    if clauses.is_empty() {
        "empty formula".to_string()
    } else {
        clauses.join("")
    }
}

fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges=[{}]", g.vertex_count(), edges.join(","))
}

fn describe_rbds(i: &RbdsInstance) -> String {
    let edges: Vec<String> = i.edges.iter().map(|(r, b)| format!("r{r}-b{b}")).collect();
    format!(
        "R={} B={} k={} edges=[{}]",
        i.red,
        i.blue,
        i.k,
        edges.join(",")
    )
}

/// One sweep instance.
enum Job {
    Formula(CnfFormula),
    Mono(Graph, usize, usize),
    Rbds(RbdsInstance),
    Kwc(Graph),
}

impl Job {
    fn describe(&self) -> String {
        match self {
            Job::Formula(f) => describe_formula(f),
            Job::Mono(g, r, l) => format!("(r,l)=({r},{l}) {}", describe_graph(g)),
            Job::Rbds(i) => describe_rbds(i),
            Job::Kwc(g) => describe_graph(g),
        }
    }

    fn build(&self, kind: ClaimKind, mode: StockmeyerMode) -> Result<GadgetOutput, Error> {
        match (self, kind) {
            (Job::Formula(f), ClaimKind::ChvatalSlater) => chvatal_slater(f),
            (Job::Formula(f), ClaimKind::Stockmeyer) => stockmeyer(f, mode),
            (Job::Formula(f), ClaimKind::Gadget03) => gadget_03(f, mode),
            (Job::Formula(f), ClaimKind::Gadget30) => gadget_30(f, mode),
            (Job::Formula(f), ClaimKind::Gadget13) => gadget_13(f, mode),
            (Job::Mono(g, r, l), ClaimKind::MonoAddClique) => Ok(mono_add_clique(g, *r, *l)),
            (Job::Mono(g, r, l), ClaimKind::MonoLiftR) => mono_lift_r(g, *r, *l),
            (Job::Rbds(i), ClaimKind::Rbds) => rbds_gadget(i),
            (Job::Kwc(g), ClaimKind::Kwc) => kwc_to_0l(g),
            _ => unreachable!("job does not match gadget"),
        }
    }

    fn source(&self) -> Source<'_> {
        match self {
            Job::Formula(f) => Source::Formula(f),
            Job::Mono(g, _, _) | Job::Kwc(g) => Source::Graph(g),
            Job::Rbds(i) => Source::Rbds(i),
        }
    }
}

fn jobs(kind: ClaimKind, cfg: &SweepConfig) -> Result<Vec<Job>, Error> {
    let mut out = Vec::new();
    match kind {
        ClaimKind::ChvatalSlater
        | ClaimKind::Stockmeyer
        | ClaimKind::Gadget03
        | ClaimKind::Gadget30
        | ClaimKind::Gadget13 => {
            out.extend(
                small_formulas(3)
                    .into_iter()
                    .filter(|f| kind != ClaimKind::Gadget13 || f.clauses().len() == 3)
                    .map(Job::Formula),
            );
        }
        ClaimKind::MonoAddClique | ClaimKind::MonoLiftR => {
            for n in 1..=cfg.max_n {
                for g in all_graphs(n) {
                    for (r, l) in MONO_PAIRS {
                        if kind == ClaimKind::MonoLiftR && r == 0 {
                            continue;
                        }
                        out.push(Job::Mono(g.clone(), r, l));
                    }
                }
            }
        }
        ClaimKind::Rbds => out.extend(small_rbds(3, 2).into_iter().map(Job::Rbds)),
        ClaimKind::Kwc => {
            out.extend((1..=cfg.max_n).flat_map(all_graphs).map(Job::Kwc));
            let mut rng = gen::rng(cfg.seed);
            for _ in 0..cfg.random {
                let n = rng.gen_range(1..=cfg.random_max_n);
                out.push(Job::Kwc(gen::gnp(n, 0.5, &mut rng)?));
            }
        }
    }
    Ok(out)
}

/// Runs the sweep of one gadget, fanning the instances out over threads.
///
/// Formula gadgets use every formula of [`small_formulas`]`(3)`, except the
/// `(1,3)` gadget, which needs three clauses and gets the three-clause ones.
/// The monotonicity gadgets use every graph on `1..=max_n` vertices with
/// each pair of [`MONO_PAIRS`] (`r >= 1` for the lift). `rbds` uses
/// [`small_rbds`]`(3, 2)`. `kwc` uses every graph on `1..=max_n` vertices
/// plus `random` seeded `G(n, 1/2)` samples with `n <= random_max_n`; its
/// outputs have up to `(k+1) n` vertices, so the enumeration cap is raised
/// to cover them.
///
/// Every instance gets its own budget ending at `deadline`. A gadget
/// precondition failure marks the instance `rejected`; any other error
/// aborts the sweep. Instance order is independent of scheduling.
pub fn run_sweep(
    kind: ClaimKind,
    cfg: &SweepConfig,
    deadline: Option<Instant>,
) -> Result<SweepJson, Error> {
    let mut caps = cfg.caps;
    if kind == ClaimKind::Kwc {
        let largest = cfg.max_n.max(cfg.random_max_n);
        caps.enum_vertices = caps.enum_vertices.max(largest * (largest + 1));
    }
    let results = jobs(kind, cfg)?
        .par_iter()
        .map(|job| {
            let name = job.describe();
            match job.build(kind, cfg.mode) {
                Err(Error::Precondition(why)) => Ok(InstanceJson::rejected(name, why)),
                Err(e) => Err(e),
                Ok(out) => {
                    let mut budget = Deadline::until(deadline);
                    let report = verify_gadget_claim(&out, job.source(), &caps, &mut budget)?;
                    Ok(InstanceJson::from_report(name, &report))
                }
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(SweepJson::new(kind.name(), kind.statement(), results))
}
