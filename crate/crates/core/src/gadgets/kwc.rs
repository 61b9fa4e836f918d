use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Claim, ClaimKind, GadgetOutput};
use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use crate::graph::GraphBuilder;
use crate::oracle::greedy_maximal_independent_set;
use crate::partition::RlPartition;

/// The `(0, k+1)`-graph with the same well-coveredness as `g`.
///
/// `k` is the size of the lowest-index greedy maximal independent set `I`,
/// and the vertices of `g` are renumbered so that `I` comes first (in
/// ascending order), followed by the rest. With `l = k + 1`, vertex
/// `v[i,j]` sits at index `(i-1)n + (j-1)`. Rows `V_i` and columns `W_j`
/// are cliques, and column `a` is complete to column `b` for each edge `ab`
/// of the renumbered graph. The rows form the emitted partition.
pub fn kwc_to_0l(g: &Graph) -> Result<GadgetOutput, Error> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Precondition(String::from(
            "the input graph has no vertex",
        )));
    }
    let greedy = greedy_maximal_independent_set(g);
    let k = greedy.len();
    let l = k + 1;
    let order: Vec<usize> = greedy.iter().chain(greedy.complement().iter()).collect();
    let h = g.permuted(&order);

    let at = |i: usize, j: usize| i * n + j;
    let mut labels = Vec::with_capacity(l * n);
    for i in 1..=l {
        labels.extend((1..=n).map(|j| format!("v[{i},{j}]")));
    }
    let mut b = GraphBuilder::with_labels(labels);
    for i in 0..l {
        for j in 0..n {
            for j2 in j + 1..n {
                b.edge(at(i, j), at(i, j2));
            }
            for i2 in i + 1..l {
                b.edge(at(i, j), at(i2, j));
            }
        }
    }
    for (a, c) in h.edges() {
        for i in 0..l {
            for i2 in 0..l {
                b.edge(at(i, a), at(i2, c));
            }
        }
    }
    let rows = (0..l)
        .map(|i| VertexSet::from_slice(l * n, &(at(i, 0)..at(i, 0) + n).collect::<Vec<_>>()))
        .collect();
    Ok(GadgetOutput {
        graph: b.build(),
        partition: Some(RlPartition::new(vec![], rows)),
        claim: Claim {
            kind: ClaimKind::Kwc,
            params: vec![("n", n), ("k", k), ("l", l)],
        },
    })
}
