use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Claim, ClaimKind, GadgetOutput};
use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::GraphBuilder;
use crate::oracle::RbdsInstance;
use crate::partition::RlPartition;

/// The `(0, k+1)`-graph of a red-blue dominating set instance.
///
/// Vertex order: `b_1..b_|B|`, then for each copy `c = 1..k` the red copies
/// `r_1^c..r_|R|^c` followed by `s_c`. The blue side and each red copy are
/// cliques, `s_c` sees all of copy `c`, and every red copy keeps the blue
/// neighbors of its original.
pub fn rbds_gadget(inst: &RbdsInstance) -> Result<GadgetOutput, Error> {
    let (red, blue, k) = (inst.red, inst.blue, inst.k);
    if blue == 0 {
        return Err(Error::Precondition(String::from(
            "the blue side must be non-empty",
        )));
    }
    if red == 0 || k > red {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= |R|, got k = {k} with |R| = {red}"
        )));
    }
    let block = red + 1;
    let red_vertex = |c: usize, a: usize| blue + c * block + a;
    let s_vertex = |c: usize| blue + c * block + red;
    let total = blue + k * block;

    let mut labels: Vec<String> = (1..=blue).map(|j| format!("b_{j}")).collect();
    for c in 1..=k {
        labels.extend((1..=red).map(|i| format!("r_{i}^{c}")));
        labels.push(format!("s_{c}"));
    }
    let mut b = GraphBuilder::with_labels(labels);
    for x in 0..blue {
        for y in x + 1..blue {
            b.edge(x, y);
        }
    }
    for c in 0..k {
        for a in 0..=red {
            for a2 in a + 1..=red {
                b.edge(blue + c * block + a, blue + c * block + a2);
            }
        }
        for &(a, bl) in &inst.edges {
            b.edge(red_vertex(c, a), bl);
        }
    }
    debug_assert!((0..k).all(|c| s_vertex(c) < total));

    let mut cliques = vec![VertexSet::from_slice(total, &(0..blue).collect::<Vec<_>>())];
    for c in 0..k {
        let members: Vec<usize> = (0..=red).map(|a| blue + c * block + a).collect();
        cliques.push(VertexSet::from_slice(total, &members));
    }
    Ok(GadgetOutput {
        graph: b.build(),
        partition: Some(RlPartition::new(vec![], cliques)),
        claim: Claim {
            kind: ClaimKind::Rbds,
            params: vec![("red", red), ("blue", blue), ("k", k)],
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::verify_partition;

    #[test]
    fn shape() {
        let inst = RbdsInstance::new(2, 2, vec![(0, 0), (1, 1)], 2).unwrap();
        let out = rbds_gadget(&inst).unwrap();
        let g = &out.graph;
        assert_eq!(g.vertex_count(), 2 + 2 * 3);
        assert_eq!(g.label(2), "r_1^1");
        assert_eq!(g.label(4), "s_1");
        assert_eq!(g.label(7), "s_2");
        // B clique 1, two copies with 3 internal edges and 2 red-blue edges each.
        assert_eq!(g.edge_count(), 1 + 2 * (3 + 2));
        assert!(verify_partition(g, out.partition.as_ref().unwrap()));
        assert_eq!(out.partition.unwrap().l(), 3);
    }

    #[test]
    fn preconditions() {
        let no_blue = RbdsInstance::new(1, 0, vec![], 1).unwrap();
        assert!(rbds_gadget(&no_blue).is_err());
        let big_k = RbdsInstance::new(1, 1, vec![(0, 0)], 2).unwrap();
        assert!(rbds_gadget(&big_k).is_err());
    }
}
