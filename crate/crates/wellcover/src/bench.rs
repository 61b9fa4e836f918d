//! Timing runs of the exact methods over generated graph families.
//!
//! Output is CSV with the columns `family,n,method,parameter,sets_examined,
//! well_covered,micros`. `parameter` is the neighborhood diversity for the
//! quotient method, `l` for the transversal method, the total size of the
//! independent blocks for the FPT method and `n` for brute force.
//! `sets_examined` is empty when the method does not visit every maximal
//! independent set. `well_covered` is `true`, `false`, `undecided` (budget
//! exhausted) or `capped`. `micros` is the fastest of the repetitions.

use std::time::{Duration, Instant};

use serde::Serialize;
use wellcover_core::oracle::is_well_covered_bruteforce_with;
use wellcover_core::partition::nd_decompose;
use wellcover_core::solvers::{wc_fpt_with, wc_transversal_with, wc_via_nd_with, Method};
use wellcover_core::{Caps, Error, Graph, RlPartition, WcVerdict};

use crate::deadline::Deadline;
use crate::gen;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// Side lengths of the `K_{n,n}` family.
    pub knn_sizes: Vec<usize>,
    /// Vertex counts of the planted `(1, l)` family.
    pub planted_sizes: Vec<usize>,
    /// Largest `l` of the planted family.
    pub planted_max_l: usize,
    /// Vertex counts of the `G(n, 1/2)` family.
    pub gnp_sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    /// Per-run time limit.
    pub budget: Option<Duration>,
    pub caps: Caps,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            knn_sizes: vec![8, 12, 16, 20],
            planted_sizes: vec![20, 40, 60],
            planted_max_l: 4,
            gnp_sizes: vec![10, 14, 18],
            reps: 3,
            seed: 0,
            budget: None,
            caps: Caps::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub method: String,
    pub parameter: usize,
    pub sets_examined: Option<u64>,
    pub well_covered: String,
    pub micros: u128,
}

/// Runs `method` on `g` once.
pub fn run_method(
    g: &Graph,
    method: Method,
    partition: Option<&RlPartition>,
    caps: &Caps,
    budget: Option<Duration>,
) -> Result<WcVerdict, Error> {
    let mut deadline = Deadline::new(budget);
    let need = || Error::Precondition(format!("method {method} needs a partition"));
    match method {
        Method::Brute => is_well_covered_bruteforce_with(g, caps, &mut deadline),
        Method::Nd => wc_via_nd_with(g, caps, &mut deadline),
        Method::Transversal => wc_transversal_with(g, partition.ok_or_else(need)?, &mut deadline),
        Method::Fpt => wc_fpt_with(g, partition.ok_or_else(need)?, caps, &mut deadline),
        Method::Special => wellcover_core::solvers::wc_02(g, partition.ok_or_else(need)?),
    }
}

fn time_method(
    family: &str,
    g: &Graph,
    method: Method,
    parameter: usize,
    partition: Option<&RlPartition>,
    cfg: &BenchConfig,
) -> Result<BenchRow, Error> {
    let mut best = u128::MAX;
    let mut outcome = None;
    for _ in 0..cfg.reps.max(1) {
        let start = Instant::now();
        let result = run_method(g, method, partition, &cfg.caps, cfg.budget);
        best = best.min(start.elapsed().as_micros());
        outcome = Some(result);
    }
    let (sets_examined, well_covered) = match outcome.expect("at least one repetition") {
        Ok(v) => (v.count_enumerated, v.well_covered.to_string()),
        Err(Error::BudgetExhausted) => (None, "undecided".to_string()),
        Err(Error::CapExceeded { .. }) => (None, "capped".to_string()),
        Err(e) => return Err(e),
    };
    Ok(BenchRow {
        family: family.to_string(),
        n: g.vertex_count(),
        method: method.as_str().to_string(),
        parameter,
        sets_examined,
        well_covered,
        micros: best,
    })
}

/// Runs every family. Rows come out in a fixed order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>, Error> {
    let mut rows = Vec::new();
    for &n in &cfg.knn_sizes {
        let g = Graph::complete_bipartite(n, n);
        let t = nd_decompose(&g).width();
        rows.push(time_method("knn", &g, Method::Nd, t, None, cfg)?);
        rows.push(time_method(
            "knn",
            &g,
            Method::Brute,
            g.vertex_count(),
            None,
            cfg,
        )?);
    }
    let mut rng = gen::rng(cfg.seed);
    for &n in &cfg.planted_sizes {
        for l in 1..=cfg.planted_max_l {
            let (g, p) = gen::planted(n, 1, l, 0.5, &mut rng)?;
            let family = format!("planted-1-{l}");
            rows.push(time_method(
                &family,
                &g,
                Method::Transversal,
                l,
                Some(&p),
                cfg,
            )?);
            let s = p.independent_union(n).len();
            rows.push(time_method(&family, &g, Method::Fpt, s, Some(&p), cfg)?);
        }
    }
    for &n in &cfg.gnp_sizes {
        let g = gen::gnp(n, 0.5, &mut rng)?;
        let t = nd_decompose(&g).width();
        rows.push(time_method("gnp", &g, Method::Nd, t, None, cfg)?);
        rows.push(time_method("gnp", &g, Method::Brute, n, None, cfg)?);
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("CSV is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_header_and_rows() {
        let cfg = BenchConfig {
            knn_sizes: vec![2],
            planted_sizes: vec![6],
            planted_max_l: 1,
            gnp_sizes: vec![5],
            reps: 1,
            ..BenchConfig::default()
        };
        let rows = run_bench(&cfg).unwrap();
        assert_eq!(rows.len(), 6);
        let text = to_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("family,n,method,parameter,sets_examined,well_covered,micros")
        );
        assert!(lines.next().unwrap().starts_with("knn,4,nd,2,,true,"));
        assert!(lines.next().unwrap().starts_with("knn,4,brute,4,2,true,"));
    }
}
