//! Well-coveredness decision procedures.
//!
//! Every procedure returning a [`WcVerdict`](crate::WcVerdict) reports the
//! same witnesses as the brute-force oracle: among the maximal independent
//! sets of extreme size, the lexicographically smallest.

mod dispatch;
mod fpt;
mod nd;
mod special;
mod transversal;

pub use dispatch::{k_well_covered, recognize_wc_rl, recognize_wc_rl_with, Method};
pub use fpt::{wc_fpt, wc_fpt_with};
pub use nd::{wc_via_nd, wc_via_nd_with};
pub use special::{degree_sequence_test, good_edges, recognize_wc_11, recognize_wc_20, wc_02};
pub use transversal::{wc_transversal, wc_transversal_with};

use crate::bitset::VertexSet;
use crate::budget::{tick, Budget};
use crate::error::Error;
use crate::graph::Graph;

/// Visits every independent set `current ∪ I_K` where `I_K` picks at most one
/// vertex from each clique in `cliques`. `blocked` must equal `N(current)`.
pub(crate) fn for_each_transversal(
    g: &Graph,
    cliques: &[&VertexSet],
    current: &mut VertexSet,
    blocked: &mut VertexSet,
    budget: &mut dyn Budget,
    visit: &mut dyn FnMut(&VertexSet, &VertexSet),
) -> Result<(), Error> {
    let Some((first, rest)) = cliques.split_first() else {
        tick(budget)?;
        visit(current, blocked);
        return Ok(());
    };
    for_each_transversal(g, rest, current, blocked, budget, visit)?;
    for v in first.iter() {
        if blocked.contains(v) {
            continue;
        }
        let saved = blocked.clone();
        current.insert(v);
        blocked.union_with(g.neighbors(v));
        for_each_transversal(g, rest, current, blocked, budget, visit)?;
        current.remove(v);
        *blocked = saved;
    }
    Ok(())
}
