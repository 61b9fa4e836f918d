//! Seeded random graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wellcover_core::graph::GraphBuilder;
use wellcover_core::{Error, Graph, RlPartition, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_p(p: f64) -> Result<(), Error> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "edge probability {p} outside [0, 1]"
        )))
    }
}

/// `G(n, p)`.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph, Error> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    check_p(p)?;
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v)?;
            }
        }
    }
    Ok(b.build())
}

/// A random `(r, l)`-graph with its planted partition.
///
/// Each vertex joins a uniformly random block; clique blocks are filled,
/// independent blocks stay empty inside, and every pair in different blocks
/// is an edge with probability `p`.
pub fn planted(
    n: usize,
    r: usize,
    l: usize,
    p: f64,
    rng: &mut impl Rng,
) -> Result<(Graph, RlPartition), Error> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if r + l == 0 {
        return Err(Error::Precondition("need r + l >= 1".into()));
    }
    check_p(p)?;
    let block: Vec<usize> = (0..n).map(|_| rng.gen_range(0..r + l)).collect();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let edge = if block[u] == block[v] {
                block[u] >= r
            } else {
                rng.gen_bool(p)
            };
            if edge {
                b.add_edge(u, v)?;
            }
        }
    }
    let mut blocks = vec![VertexSet::new(n); r + l];
    for (v, &k) in block.iter().enumerate() {
        blocks[k].insert(v);
    }
    let cliques = blocks.split_off(r);
    Ok((b.build(), RlPartition::new(blocks, cliques)))
}

/// A uniformly random relabelling of `g`.
pub fn shuffled(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.shuffle(rng);
    g.permuted(&order)
}
