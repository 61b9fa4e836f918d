use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{ClaimKind, GadgetOutput};
use crate::budget::{Budget, Caps};
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::{
    is_k_colorable, is_well_covered_bruteforce_with, rbds_bruteforce, sat_bruteforce, CnfFormula,
    RbdsInstance, WcVerdict,
};
use crate::partition::{find_rl_partition_with, verify_partition, RlPartition};

/// The instance a gadget was built from.
#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    Formula(&'a CnfFormula),
    Graph(&'a Graph),
    Rbds(&'a RbdsInstance),
}

/// Both sides of a gadget's equivalence as computed by the oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimReport {
    /// `left == right` and no side condition failed.
    pub holds: bool,
    pub left: bool,
    pub right: bool,
    /// Failed side conditions, such as size bounds or an invalid partition.
    pub violations: Vec<String>,
    /// Side conditions that were not evaluated because an oracle cap was hit.
    pub skipped: Vec<String>,
    /// Named vertex lists backing the answers.
    pub witnesses: Vec<(&'static str, Vec<usize>)>,
}

/// `(r, l)`-well-coveredness by partition search plus maximal independent
/// set enumeration. Enumeration only runs when a partition exists.
pub fn rl_well_covered(
    g: &Graph,
    r: usize,
    l: usize,
    caps: &Caps,
    budget: &mut dyn Budget,
) -> Result<(Option<RlPartition>, Option<WcVerdict>), Error> {
    let Some(p) = find_rl_partition_with(g, r, l, budget)? else {
        return Ok((None, None));
    };
    let v = is_well_covered_bruteforce_with(g, caps, budget)?;
    Ok((Some(p), Some(v)))
}

struct Report {
    violations: Vec<String>,
    skipped: Vec<String>,
    witnesses: Vec<(&'static str, Vec<usize>)>,
}

impl Report {
    fn require(&mut self, ok: bool, what: String) {
        if !ok {
            self.violations.push(what);
        }
    }

    fn verdict(&mut self, v: &WcVerdict) {
        self.witnesses.push(("witness_min", v.witness_min.to_vec()));
        self.witnesses.push(("witness_max", v.witness_max.to_vec()));
    }

    fn rl(&mut self, side: &'static str, found: &(Option<RlPartition>, Option<WcVerdict>)) -> bool {
        if let (Some(_), Some(v)) = found {
            self.witnesses.push((side, v.witness_max.to_vec()));
            v.well_covered
        } else {
            false
        }
    }
}

fn formula<'a>(source: Source<'a>) -> Result<&'a CnfFormula, Error> {
    match source {
        Source::Formula(f) => Ok(f),
        _ => Err(Error::Precondition(String::from(
            "this gadget is built from a formula",
        ))),
    }
}

fn graph<'a>(source: Source<'a>) -> Result<&'a Graph, Error> {
    match source {
        Source::Graph(g) => Ok(g),
        _ => Err(Error::Precondition(String::from(
            "this gadget is built from a graph",
        ))),
    }
}

fn param(out: &GadgetOutput, name: &str) -> Result<usize, Error> {
    out.claim
        .param(name)
        .ok_or_else(|| Error::Precondition(format!("claim lacks parameter {name}")))
}

fn satisfiable(f: &CnfFormula, caps: &Caps, rep: &mut Report) -> Result<bool, Error> {
    let found = sat_bruteforce(f, caps)?;
    if let Some(a) = &found {
        let trues = a
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i + 1)
            .collect();
        rep.witnesses.push(("assignment_true_vars", trues));
    }
    Ok(found.is_some())
}

/// Evaluates both sides of `out`'s claim against `source` with the oracles.
pub fn verify_gadget_claim(
    out: &GadgetOutput,
    source: Source<'_>,
    caps: &Caps,
    budget: &mut dyn Budget,
) -> Result<ClaimReport, Error> {
    let g = &out.graph;
    let mut rep = Report {
        violations: Vec::new(),
        skipped: Vec::new(),
        witnesses: Vec::new(),
    };
    if let Some(p) = &out.partition {
        if let Err(e) = p.check(g) {
            rep.violations.push(format!("emitted partition: {e}"));
        }
    }
    let (left, right) = match out.claim.kind {
        ClaimKind::ChvatalSlater => {
            let f = formula(source)?;
            let n = f.num_vars();
            let left = satisfiable(f, caps, &mut rep)?;
            let v = is_well_covered_bruteforce_with(g, caps, budget)?;
            rep.verdict(&v);
            rep.require(
                v.min_size >= n && v.max_size <= n + 1,
                format!(
                    "maximal independent set sizes {}..{} outside {n}..{}",
                    v.min_size,
                    v.max_size,
                    n + 1
                ),
            );
            (left, !v.well_covered)
        }
        ClaimKind::Stockmeyer => {
            let f = formula(source)?;
            let (n, m) = (f.num_vars(), f.clauses().len());
            let left = satisfiable(f, caps, &mut rep)?;
            let coloring = is_k_colorable(g, 3);
            if let Some(c) = &coloring {
                rep.witnesses.push(("coloring", c.clone()));
            }
            let extra = param(out, "anchored")?;
            rep.require(
                g.vertex_count() == 2 * n + 6 * m + 2,
                format!(
                    "{} vertices, expected {}",
                    g.vertex_count(),
                    2 * n + 6 * m + 2
                ),
            );
            rep.require(
                g.edge_count() == 3 * n + 11 * m + extra,
                format!(
                    "{} edges, expected {}",
                    g.edge_count(),
                    3 * n + 11 * m + extra
                ),
            );
            (left, coloring.is_some())
        }
        ClaimKind::Gadget03 | ClaimKind::Gadget30 | ClaimKind::Gadget13 => {
            let f = formula(source)?;
            let left = satisfiable(f, caps, &mut rep)?;
            let (r, l) = match out.claim.kind {
                ClaimKind::Gadget03 => (0, 3),
                ClaimKind::Gadget30 => (3, 0),
                _ => (1, 3),
            };
            let found = rl_well_covered(g, r, l, caps, budget)?;
            let right = rep.rl("graph_witness_max", &found);
            if out.claim.kind == ClaimKind::Gadget30 {
                let core = g.vertex_count() / 2;
                match found.1 {
                    Some(v) => rep.require(
                        v.well_covered && v.min_size == core,
                        format!(
                            "pendant graph has sizes {}..{}, expected {core}",
                            v.min_size, v.max_size
                        ),
                    ),
                    None if g.vertex_count() <= caps.enum_vertices => {
                        let v = is_well_covered_bruteforce_with(g, caps, budget)?;
                        rep.require(
                            v.well_covered && v.min_size == core,
                            format!(
                                "pendant graph has sizes {}..{}, expected {core}",
                                v.min_size, v.max_size
                            ),
                        );
                    }
                    None => rep.skipped.push(String::from("pendant graph well-covered")),
                }
            }
            (left, right)
        }
        ClaimKind::MonoAddClique | ClaimKind::MonoLiftR => {
            let input = graph(source)?;
            let (r, l) = (param(out, "r")?, param(out, "l")?);
            let (r2, l2) = if out.claim.kind == ClaimKind::MonoAddClique {
                (r, l + 1)
            } else {
                (r + 1, l)
            };
            let before = rl_well_covered(input, r, l, caps, budget)?;
            let after = rl_well_covered(g, r2, l2, caps, budget)?;
            (
                rep.rl("input_witness_max", &before),
                rep.rl("graph_witness_max", &after),
            )
        }
        ClaimKind::Rbds => {
            let Source::Rbds(inst) = source else {
                return Err(Error::Precondition(String::from(
                    "this gadget is built from an RBDS instance",
                )));
            };
            let dominating = rbds_bruteforce(inst, caps)?;
            if let Some(d) = &dominating {
                rep.witnesses.push(("dominating_set", d.clone()));
            }
            let v = is_well_covered_bruteforce_with(g, caps, budget)?;
            rep.verdict(&v);
            let k = inst.k;
            rep.require(
                v.min_size >= k && v.max_size <= k + 1,
                format!(
                    "maximal independent set sizes {}..{} outside {k}..{}",
                    v.min_size,
                    v.max_size,
                    k + 1
                ),
            );
            (dominating.is_some(), !v.well_covered)
        }
        ClaimKind::Kwc => {
            let input = graph(source)?;
            let k = param(out, "k")?;
            let blocks = out.partition.as_ref().map_or(0, |p| p.l());
            rep.require(
                blocks == k + 1,
                format!("{blocks} clique blocks, expected {}", k + 1),
            );
            rep.require(
                out.partition
                    .as_ref()
                    .is_some_and(|p| p.r() == 0 && verify_partition(g, p)),
                String::from("rows do not form a (0,l)-partition"),
            );
            let before = is_well_covered_bruteforce_with(input, caps, budget)?;
            let after = is_well_covered_bruteforce_with(g, caps, budget)?;
            rep.verdict(&after);
            (before.well_covered, after.well_covered)
        }
    };
    Ok(ClaimReport {
        holds: left == right && rep.violations.is_empty(),
        left,
        right,
        violations: rep.violations,
        skipped: rep.skipped,
        witnesses: rep.witnesses,
    })
}
