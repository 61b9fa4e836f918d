use crate::bitset::VertexSet;
use crate::budget::{tick, Budget, Caps, Unlimited};
use crate::error::Error;
use crate::graph::{Graph, GraphBuilder};
use crate::oracle::{MaximalIndependentSets, VerdictBuilder, WcVerdict};
use crate::partition::{nd_decompose, NdDecomposition, PartKind};

/// Exact verdict through the neighborhood-diversity quotient.
///
/// A maximal independent set uses either none of a twin class or all of an
/// independent class or exactly one vertex of a clique class, and the
/// classes it touches form a maximal independent set of the quotient graph.
/// So the verdict follows from the maximal independent sets of the quotient,
/// weighted by class size for independent classes and by 1 for cliques.
/// The number of classes is capped by [`Caps::nd_parts`].
pub fn wc_via_nd(g: &Graph, caps: &Caps) -> Result<WcVerdict, Error> {
    wc_via_nd_with(g, caps, &mut Unlimited)
}

pub fn wc_via_nd_with(g: &Graph, caps: &Caps, budget: &mut dyn Budget) -> Result<WcVerdict, Error> {
    let d = nd_decompose(g);
    Caps::check("neighborhood diversity", d.width(), caps.nd_parts)?;
    let n = g.vertex_count();
    let mut acc = VerdictBuilder::new();
    for chosen in MaximalIndependentSets::new(&quotient_graph(&d)) {
        tick(budget)?;
        acc.offer(&expand(&d, &chosen, n));
    }
    let mut v = acc
        .finish(false)
        .expect("the quotient has a maximal independent set");
    v.count_enumerated = None;
    Ok(v)
}

fn quotient_graph(d: &NdDecomposition) -> Graph {
    let mut b = GraphBuilder::new(d.width());
    for (i, row) in d.quotient.iter().enumerate() {
        for j in row.iter().filter(|&j| j > i) {
            b.edge(i, j);
        }
    }
    b.build()
}

/// Lexicographically smallest concrete set over the chosen parts.
fn expand(d: &NdDecomposition, chosen: &VertexSet, n: usize) -> VertexSet {
    let mut out = VertexSet::new(n);
    for i in chosen.iter() {
        let part = &d.parts[i];
        match part.kind {
            PartKind::Independent => out.union_with(&part.members),
            PartKind::Clique => {
                out.insert(part.members.first().expect("parts are non-empty"));
            }
        }
    }
    out
}
