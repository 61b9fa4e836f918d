use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Claim, ClaimKind, GadgetOutput};
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::greedy_maximal_independent_set;

fn labelled(g: &Graph) -> Vec<String> {
    (0..g.vertex_count()).map(|v| g.label(v)).collect()
}

fn named(n: usize, prefix: &str) -> Graph {
    Graph::empty(n).with_labels((1..=n).map(|i| format!("{prefix}_{i}")).collect())
}

/// `g` plus a disjoint clique `z_1..z_{r+1}`.
pub fn mono_add_clique(g: &Graph, r: usize, l: usize) -> GadgetOutput {
    let z = Graph::complete(r + 1).with_labels((1..=r + 1).map(|i| format!("z_{i}")).collect());
    let g = g.clone().with_labels(labelled(g));
    GadgetOutput {
        graph: g.disjoint_union(&z),
        partition: None,
        claim: Claim {
            kind: ClaimKind::MonoAddClique,
            params: vec![("r", r), ("l", l)],
        },
    }
}

/// `g` plus `l + 1` isolated vertices `y_i`, joined to `p` independent
/// vertices `z_i`, where `p` is the size of the lowest-index greedy maximal
/// independent set of the padded graph.
pub fn mono_lift_r(g: &Graph, r: usize, l: usize) -> Result<GadgetOutput, Error> {
    if r == 0 {
        return Err(Error::Precondition(String::from("lifting r needs r >= 1")));
    }
    let padded = g
        .clone()
        .with_labels(labelled(g))
        .disjoint_union(&named(l + 1, "y"));
    let p = greedy_maximal_independent_set(&padded).len();
    Ok(GadgetOutput {
        graph: padded.join(&named(p, "z")),
        partition: None,
        claim: Claim {
            kind: ClaimKind::MonoLiftR,
            params: vec![("r", r), ("l", l), ("p", p)],
        },
    })
}
