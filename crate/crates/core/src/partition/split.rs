use alloc::vec;
use alloc::vec::Vec;

use super::rl::{verify_partition, RlPartition};
use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;

/// Split-graph recognition by the degree-sequence threshold test.
///
/// With degrees sorted non-increasingly and `m` the largest index with
/// `d_m >= m - 1`, the graph is split iff
/// `d_1 + .. + d_m = m(m-1) + d_{m+1} + .. + d_n`; the `m` top vertices then
/// form the clique.
pub fn split_partition(g: &Graph) -> Option<RlPartition> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .next_back()
        .unwrap_or(0);
    let head: usize = order[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = order[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique = VertexSet::from_slice(n, &order[..m]);
    let independent = clique.complement();
    let p = RlPartition::new(vec![independent], vec![clique]);
    debug_assert!(verify_partition(g, &p));
    Some(p)
}

/// Every `(1,1)`-partition of a split graph, sorted by independent block.
///
/// Two split partitions differ by at most one vertex on each side (two
/// vertices leaving a clique would have to enter an independent set
/// together), so all of them are found among the single moves and swaps
/// around the threshold partition.
pub fn enumerate_split_partitions(g: &Graph) -> Result<Vec<RlPartition>, Error> {
    let base = split_partition(g).ok_or(Error::NotSplit)?;
    let (s0, k0) = (&base.independents[0], &base.cliques[0]);
    let mut candidates: Vec<(VertexSet, VertexSet)> = vec![(s0.clone(), k0.clone())];
    let out_k: Vec<Option<usize>> = core::iter::once(None).chain(k0.iter().map(Some)).collect();
    let out_s: Vec<Option<usize>> = core::iter::once(None).chain(s0.iter().map(Some)).collect();
    for &x in &out_k {
        for &y in &out_s {
            if x.is_none() && y.is_none() {
                continue;
            }
            let (mut s, mut k) = (s0.clone(), k0.clone());
            if let Some(x) = x {
                k.remove(x);
                s.insert(x);
            }
            if let Some(y) = y {
                s.remove(y);
                k.insert(y);
            }
            candidates.push((s, k));
        }
    }
    let mut found: Vec<RlPartition> = candidates
        .into_iter()
        .map(|(s, k)| RlPartition::new(vec![s], vec![k]))
        .filter(|p| verify_partition(g, p))
        .collect();
    found.sort_by(|a, b| a.independents[0].cmp(&b.independents[0]));
    found.dedup();
    Ok(found)
}
