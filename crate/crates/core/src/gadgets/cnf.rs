use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Claim, ClaimKind, GadgetOutput};
use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::{Graph, GraphBuilder};
use crate::oracle::CnfFormula;
use crate::partition::RlPartition;

/// Variant of the 3-coloring construction.
///
/// `Literal` builds exactly the five edge families: `u_i ~u_i`, the clause
/// gadgets, the literal edges, `t_1` to every literal and `t_2` to every
/// `v_6[j]`. Nothing stops `t_1` and `t_2` from sharing a color there, and
/// then every clause gadget can be colored whatever its literals are, so the
/// literal graph is 3-colorable even for unsatisfiable formulas. `Anchored`
/// adds the single edge `t_1 t_2`, which restores the equivalence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum StockmeyerMode {
    #[default]
    Literal,
    Anchored,
}

fn require_nonempty(f: &CnfFormula) -> Result<(), Error> {
    if f.num_vars() == 0 || f.clauses().is_empty() {
        return Err(Error::Precondition(String::from(
            "the formula needs at least one variable and one clause",
        )));
    }
    Ok(())
}

/// Vertex of a literal: `u_i` at `i - 1`, `~u_i` at `n + i - 1`.
fn literal_vertex(n: usize, lit: i32) -> usize {
    let var = lit.unsigned_abs() as usize - 1;
    if lit > 0 {
        var
    } else {
        n + var
    }
}

fn literal_labels(n: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("u_{i}"))
        .chain((1..=n).map(|i| format!("~u_{i}")))
        .collect()
}

fn formula_params(f: &CnfFormula) -> Vec<(&'static str, usize)> {
    vec![("n", f.num_vars()), ("m", f.clauses().len())]
}

/// The well-coveredness instance of a 3-CNF formula.
///
/// Vertices `u_1..u_n`, `~u_1..~u_n`, `c_1..c_m`; `u_i ~u_i` edges, an edge
/// from each clause vertex to the literals it contains, and a clique on the
/// clause vertices. The literal sides and the clause clique form a
/// `(2,1)`-partition.
pub fn chvatal_slater(f: &CnfFormula) -> Result<GadgetOutput, Error> {
    require_nonempty(f)?;
    let (n, m) = (f.num_vars(), f.clauses().len());
    let mut labels = literal_labels(n);
    labels.extend((1..=m).map(|j| format!("c_{j}")));
    let mut b = GraphBuilder::with_labels(labels);
    for i in 0..n {
        b.edge(i, n + i);
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        for &lit in clause {
            b.edge(2 * n + j, literal_vertex(n, lit));
        }
        for k in j + 1..m {
            b.edge(2 * n + j, 2 * n + k);
        }
    }
    let total = 2 * n + m;
    let range = |lo: usize, hi: usize| VertexSet::from_slice(total, &(lo..hi).collect::<Vec<_>>());
    let partition = RlPartition::new(
        vec![range(0, n), range(n, 2 * n)],
        vec![range(2 * n, total)],
    );
    Ok(GadgetOutput {
        graph: b.build(),
        partition: Some(partition),
        claim: Claim {
            kind: ClaimKind::ChvatalSlater,
            params: formula_params(f),
        },
    })
}

/// The 3-coloring instance of a 3-CNF formula.
///
/// Vertices `u_i`, `~u_i`, then `v_1[j]..v_6[j]` per clause, then `t_1` and
/// `t_2`: `2n + 6m + 2` in all. The literal variant has `3n + 11m` edges.
pub fn stockmeyer(f: &CnfFormula, mode: StockmeyerMode) -> Result<GadgetOutput, Error> {
    let g = stockmeyer_graph(f, mode)?;
    let mut params = formula_params(f);
    params.push(("anchored", usize::from(mode == StockmeyerMode::Anchored)));
    Ok(GadgetOutput {
        graph: g,
        partition: None,
        claim: Claim {
            kind: ClaimKind::Stockmeyer,
            params,
        },
    })
}

fn stockmeyer_graph(f: &CnfFormula, mode: StockmeyerMode) -> Result<Graph, Error> {
    require_nonempty(f)?;
    let (n, m) = (f.num_vars(), f.clauses().len());
    let mut labels = literal_labels(n);
    for j in 1..=m {
        labels.extend((1..=6).map(|k| format!("v_{k}[{j}]")));
    }
    labels.push(String::from("t_1"));
    labels.push(String::from("t_2"));
    let (t1, t2) = (2 * n + 6 * m, 2 * n + 6 * m + 1);
    let mut b = GraphBuilder::with_labels(labels);
    for i in 0..n {
        b.edge(i, n + i);
        b.edge(t1, i);
        b.edge(t1, n + i);
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let v = |k: usize| 2 * n + 6 * j + k - 1;
        for (x, y) in [(1, 2), (2, 4), (4, 1), (4, 5), (5, 6), (6, 3), (3, 5)] {
            b.edge(v(x), v(y));
        }
        for (k, &lit) in clause.iter().enumerate() {
            b.edge(v(k + 1), literal_vertex(n, lit));
        }
        b.edge(t2, v(6));
    }
    if mode == StockmeyerMode::Anchored {
        b.edge(t1, t2);
    }
    Ok(b.build())
}

fn derived(f: &CnfFormula, mode: StockmeyerMode, kind: ClaimKind, graph: Graph) -> GadgetOutput {
    let mut params = formula_params(f);
    params.push(("anchored", usize::from(mode == StockmeyerMode::Anchored)));
    GadgetOutput {
        graph,
        partition: None,
        claim: Claim { kind, params },
    }
}

/// Complement of the 3-coloring instance after every edge outside a triangle
/// received an apex `x(u,v)`. Its maximal cliques are all triangles.
pub fn gadget_03(f: &CnfFormula, mode: StockmeyerMode) -> Result<GadgetOutput, Error> {
    let g = stockmeyer_graph(f, mode)?.triangle_augment().complement();
    Ok(derived(f, mode, ClaimKind::Gadget03, g))
}

/// The 3-coloring instance with a pendant vertex on every vertex. Always
/// well-covered, every maximal independent set having `2n + 6m + 2` vertices.
pub fn gadget_30(f: &CnfFormula, mode: StockmeyerMode) -> Result<GadgetOutput, Error> {
    let g = stockmeyer_graph(f, mode)?.add_pendants();
    Ok(derived(f, mode, ClaimKind::Gadget30, g))
}

/// Complement of the 3-coloring instance with a pendant on every vertex.
/// Needs at least three clauses.
pub fn gadget_13(f: &CnfFormula, mode: StockmeyerMode) -> Result<GadgetOutput, Error> {
    if f.clauses().len() < 3 {
        return Err(Error::Precondition(String::from(
            "the (1,3) construction requires more than two clauses",
        )));
    }
    let g = stockmeyer_graph(f, mode)?.complement().add_pendants();
    Ok(derived(f, mode, ClaimKind::Gadget13, g))
}
