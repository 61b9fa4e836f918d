use alloc::vec::Vec;

use super::for_each_transversal;
use crate::bitset::VertexSet;
use crate::budget::{tick, Budget, Caps, Unlimited};
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::{is_maximal_independent, VerdictBuilder, WcVerdict};
use crate::partition::RlPartition;

/// Exact verdict for a graph with a given `(r, l)`-partition.
///
/// Every independent subset `T` of the independent blocks is extended by at
/// most one vertex per clique; maximal results are kept. The running time is
/// `2^s n^l` with `s` the total size of the independent blocks, which is
/// capped by [`Caps::fpt_independent`].
pub fn wc_fpt(g: &Graph, p: &RlPartition, caps: &Caps) -> Result<WcVerdict, Error> {
    wc_fpt_with(g, p, caps, &mut Unlimited)
}

pub fn wc_fpt_with(
    g: &Graph,
    p: &RlPartition,
    caps: &Caps,
    budget: &mut dyn Budget,
) -> Result<WcVerdict, Error> {
    p.check(g)?;
    let n = g.vertex_count();
    let pool: Vec<usize> = p.independent_union(n).to_vec();
    Caps::check("independent block total", pool.len(), caps.fpt_independent)?;
    let cliques: Vec<&VertexSet> = p.cliques.iter().filter(|k| !k.is_empty()).collect();

    let mut acc = VerdictBuilder::new();
    let mut search = Subsets {
        g,
        pool: &pool,
        cliques: &cliques,
        acc: &mut acc,
    };
    search.run(0, &mut VertexSet::new(n), &mut VertexSet::new(n), budget)?;
    Ok(acc.finish(true).expect("some extension is maximal"))
}

struct Subsets<'a> {
    g: &'a Graph,
    pool: &'a [usize],
    cliques: &'a [&'a VertexSet],
    acc: &'a mut VerdictBuilder,
}

impl Subsets<'_> {
    /// Decides membership of `pool[i..]`, keeping `chosen` independent.
    fn run(
        &mut self,
        i: usize,
        chosen: &mut VertexSet,
        blocked: &mut VertexSet,
        budget: &mut dyn Budget,
    ) -> Result<(), Error> {
        tick(budget)?;
        let Some(&v) = self.pool.get(i) else {
            let g = self.g;
            let acc = &mut *self.acc;
            let mut visit = |set: &VertexSet, _: &VertexSet| {
                if is_maximal_independent(g, set) {
                    acc.offer(set);
                }
            };
            return for_each_transversal(g, self.cliques, chosen, blocked, budget, &mut visit);
        };
        self.run(i + 1, chosen, blocked, budget)?;
        if !blocked.contains(v) {
            let saved = blocked.clone();
            chosen.insert(v);
            blocked.union_with(self.g.neighbors(v));
            self.run(i + 1, chosen, blocked, budget)?;
            chosen.remove(v);
            *blocked = saved;
        }
        Ok(())
    }
}
