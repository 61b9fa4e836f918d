use alloc::format;
use alloc::vec::Vec;

use super::for_each_transversal;
use crate::bitset::VertexSet;
use crate::budget::{Budget, Unlimited};
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::{is_maximal_independent, VerdictBuilder, WcVerdict};
use crate::partition::RlPartition;

/// Exact verdict for a graph with a given `(r, l)`-partition, `r <= 1`.
///
/// A maximal independent set meets each clique in at most one vertex, and
/// once that choice `I_K` is fixed the rest of the set is forced to be
/// `S \ N(I_K)`. All `O(n^l)` choices are tried, the empty one included, and
/// those whose completion is not maximal are dropped.
pub fn wc_transversal(g: &Graph, p: &RlPartition) -> Result<WcVerdict, Error> {
    wc_transversal_with(g, p, &mut Unlimited)
}

pub fn wc_transversal_with(
    g: &Graph,
    p: &RlPartition,
    budget: &mut dyn Budget,
) -> Result<WcVerdict, Error> {
    p.check(g)?;
    if p.r() > 1 {
        return Err(Error::Precondition(format!(
            "the transversal method needs at most one independent block, got {}",
            p.r()
        )));
    }
    let n = g.vertex_count();
    let s = p.independent_union(n);
    let cliques: Vec<&VertexSet> = p.cliques.iter().filter(|k| !k.is_empty()).collect();
    let mut acc = VerdictBuilder::new();
    let mut visit = |chosen: &VertexSet, blocked: &VertexSet| {
        let mut set = s.difference(blocked);
        set.union_with(chosen);
        if is_maximal_independent(g, &set) {
            acc.offer(&set);
        }
    };
    for_each_transversal(
        g,
        &cliques,
        &mut VertexSet::new(n),
        &mut VertexSet::new(n),
        budget,
        &mut visit,
    )?;
    Ok(acc
        .finish(true)
        .expect("the greedy completion of some choice is maximal"))
}
