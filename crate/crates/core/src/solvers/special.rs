use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;
use crate::oracle::WcVerdict;
use crate::partition::{enumerate_split_partitions, two_coloring, RlPartition};

/// Exact verdict for a graph with a `(0, 2)`-partition.
///
/// Every maximal independent set has one or two vertices. A clique is
/// well-covered; otherwise two non-adjacent vertices exist, and the graph is
/// well-covered iff no vertex is universal.
pub fn wc_02(g: &Graph, p: &RlPartition) -> Result<WcVerdict, Error> {
    p.check(g)?;
    if p.r() != 0 || p.l() != 2 {
        return Err(Error::Precondition(String::from(
            "expected a (0,2)-partition",
        )));
    }
    let n = g.vertex_count();
    let pair = (0..n).find_map(|u| {
        g.neighbors(u)
            .complement()
            .iter()
            .find(|&v| v > u)
            .map(|v| VertexSet::from_slice(n, &[u, v]))
    });
    let universal = g
        .universal_vertices()
        .first()
        .map(|&u| VertexSet::from_slice(n, &[u]));
    let (small, large) = match (universal, pair) {
        (Some(u), Some(p)) => (u, p),
        (Some(u), None) => (u.clone(), u),
        (None, Some(p)) => (p.clone(), p),
        // Only the empty graph has neither.
        (None, None) => (VertexSet::new(n), VertexSet::new(n)),
    };
    Ok(WcVerdict {
        well_covered: small.len() == large.len(),
        min_size: small.len(),
        max_size: large.len(),
        witness_min: small,
        witness_max: large,
        count_enumerated: None,
    })
}

/// `(1,1)`-well-coveredness, with a witness partition.
///
/// A split graph with partition `(S, K)` is well-covered iff either no vertex
/// of `K` has a neighbor in `S` or every vertex of `K` has exactly one; all
/// split partitions are tried. The degree-sequence characterisation is
/// evaluated as well and must agree.
pub fn recognize_wc_11(g: &Graph) -> Option<RlPartition> {
    let found = enumerate_split_partitions(g).ok().and_then(|parts| {
        parts.into_iter().find(|p| {
            let (s, k) = (&p.independents[0], &p.cliques[0]);
            let counts: Vec<usize> = k
                .iter()
                .map(|x| g.neighbors(x).intersection_len(s))
                .collect();
            counts.iter().all(|&c| c == 0) || counts.iter().all(|&c| c == 1)
        })
    });
    debug_assert_eq!(
        found.is_some(),
        degree_sequence_test(g),
        "split partition test and degree-sequence test disagree on {g:?}"
    );
    found
}

/// The degree-sequence form of `(1,1)`-well-coveredness: `g` is split and,
/// for some `k >= 0`, its non-increasing degree sequence starts with `k`
/// entries equal to `k` followed by entries summing to `k`, or with `k`
/// entries equal to `k - 1` followed by zeros.
pub fn degree_sequence_test(g: &Graph) -> bool {
    if enumerate_split_partitions(g).is_err() {
        return false;
    }
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    (0..=n).any(|k| {
        let (head, tail) = d.split_at(k);
        let form_a = head.iter().all(|&x| x == k) && tail.iter().sum::<usize>() == k;
        let form_b = k >= 1 && head.iter().all(|&x| x == k - 1) && tail.iter().all(|&x| x == 0);
        form_a || form_b
    })
}

/// Edges `uv` whose closed surroundings `G[N(u) ∪ N(v)]` induce a complete
/// bipartite graph.
pub fn good_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| {
            let around = g.neighbors(u).union(g.neighbors(v));
            let (h, _) = g.induced_subgraph(&around);
            match two_coloring(&h) {
                None => false,
                Some(color) => {
                    let left = color.iter().filter(|&&c| c == 0).count();
                    h.edge_count() == left * (h.vertex_count() - left)
                }
            }
        })
        .collect()
}

/// `(2,0)`-well-coveredness.
///
/// A connected bipartite graph on two or more vertices is well-covered iff
/// its good edges contain a perfect matching. Isolated vertices are
/// well-covered components on their own.
pub fn recognize_wc_20(g: &Graph) -> bool {
    let Some(color) = two_coloring(g) else {
        return false;
    };
    let n = g.vertex_count();
    let mut good = vec![Vec::new(); n];
    for (u, v) in good_edges(g) {
        let (a, b) = if color[u] == 0 { (u, v) } else { (v, u) };
        good[a].push(b);
    }
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for a in (0..n).filter(|&a| color[a] == 0) {
        let mut seen = vec![false; n];
        augment(a, &good, &mut mate, &mut seen);
    }
    let matched = |v: usize| {
        if color[v] == 1 {
            mate[v].is_some()
        } else {
            mate.contains(&Some(v))
        }
    };
    (0..n).all(|v| g.degree(v) == 0 || matched(v))
}

/// Kuhn's augmenting path step; `mate` is indexed by right-side vertices.
fn augment(a: usize, adj: &[Vec<usize>], mate: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &b in &adj[a] {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        if mate[b].is_none_or(|other| augment(other, adj, mate, seen)) {
            mate[b] = Some(a);
            return true;
        }
    }
    false
}
