use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::split::split_partition;
use crate::bitset::VertexSet;
use crate::budget::{tick, Budget, Unlimited};
use crate::error::Error;
use crate::graph::Graph;

/// A partition of the vertices into `r` independent sets and `l` cliques.
/// Blocks may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RlPartition {
    pub independents: Vec<VertexSet>,
    pub cliques: Vec<VertexSet>,
}

impl RlPartition {
    pub fn new(independents: Vec<VertexSet>, cliques: Vec<VertexSet>) -> Self {
        RlPartition {
            independents,
            cliques,
        }
    }

    /// Builds a partition from 0-based member lists over `n` vertices.
    pub fn from_lists(
        n: usize,
        independents: &[Vec<usize>],
        cliques: &[Vec<usize>],
    ) -> Result<Self, Error> {
        let convert = |lists: &[Vec<usize>]| -> Result<Vec<VertexSet>, Error> {
            lists
                .iter()
                .map(|l| {
                    if let Some(&v) = l.iter().find(|&&v| v >= n) {
                        return Err(Error::InvalidPartition(format!(
                            "vertex {v} outside 0..{n}"
                        )));
                    }
                    Ok(VertexSet::from_slice(n, l))
                })
                .collect()
        };
        Ok(RlPartition::new(convert(independents)?, convert(cliques)?))
    }

    pub fn r(&self) -> usize {
        self.independents.len()
    }

    pub fn l(&self) -> usize {
        self.cliques.len()
    }

    pub fn blocks(&self) -> impl Iterator<Item = &VertexSet> {
        self.independents.iter().chain(&self.cliques)
    }

    /// Union of the independent blocks.
    pub fn independent_union(&self, n: usize) -> VertexSet {
        self.independents
            .iter()
            .fold(VertexSet::new(n), |mut acc, s| {
                acc.union_with(s);
                acc
            })
    }

    /// Describes the first violated invariant, if any.
    pub fn check(&self, g: &Graph) -> Result<(), Error> {
        let n = g.vertex_count();
        let mut seen = VertexSet::new(n);
        for (i, b) in self.blocks().enumerate() {
            if b.universe() != n {
                return Err(Error::InvalidPartition(format!(
                    "block {i} ranges over {} vertices, graph has {n}",
                    b.universe()
                )));
            }
            if seen.intersects(b) {
                return Err(Error::InvalidPartition(format!(
                    "block {i} overlaps an earlier block"
                )));
            }
            seen.union_with(b);
        }
        if seen.len() != n {
            return Err(Error::InvalidPartition(
                "blocks do not cover every vertex".into(),
            ));
        }
        if let Some(i) = self.independents.iter().position(|s| !g.is_independent(s)) {
            return Err(Error::InvalidPartition(format!(
                "independent block {i} contains an edge"
            )));
        }
        if let Some(i) = self.cliques.iter().position(|k| !g.is_clique(k)) {
            return Err(Error::InvalidPartition(format!(
                "clique block {i} misses an edge"
            )));
        }
        Ok(())
    }
}

/// True iff `p` is an `(r, l)`-partition of `g`.
pub fn verify_partition(g: &Graph, p: &RlPartition) -> bool {
    p.check(g).is_ok()
}

/// BFS 2-coloring from the lowest uncolored vertex; `None` on an odd cycle.
pub fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v).iter() {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

fn classes(n: usize, color: &[u8]) -> [VertexSet; 2] {
    let mut out = [VertexSet::new(n), VertexSet::new(n)];
    for (v, &c) in color.iter().enumerate() {
        out[c as usize].insert(v);
    }
    out
}

fn padded(mut blocks: Vec<VertexSet>, count: usize, n: usize) -> Vec<VertexSet> {
    blocks.resize_with(count, || VertexSet::new(n));
    blocks
}

/// An `(r, l)`-partition of `g`, or `None` if there is none.
///
/// `(1,0)`, `(0,1)`, `(2,0)`, `(0,2)` and `(1,1)` are decided directly;
/// everything else goes through an exact backtracking search. The result is
/// exact; the search never gives up on its own.
pub fn find_rl_partition(g: &Graph, r: usize, l: usize) -> Result<Option<RlPartition>, Error> {
    find_rl_partition_with(g, r, l, &mut Unlimited)
}

/// As [`find_rl_partition`]; the backtracking search charges one budget
/// step per node and fails with [`Error::BudgetExhausted`] when it runs out.
pub fn find_rl_partition_with(
    g: &Graph,
    r: usize,
    l: usize,
    budget: &mut dyn Budget,
) -> Result<Option<RlPartition>, Error> {
    if r + l == 0 {
        return Err(Error::Precondition("need r + l >= 1".into()));
    }
    let n = g.vertex_count();
    let found = match (r, l) {
        (1, 0) => (g.edge_count() == 0).then(|| RlPartition::new(vec![g.vertex_set()], vec![])),
        (0, 1) => g
            .is_clique(&g.vertex_set())
            .then(|| RlPartition::new(vec![], vec![g.vertex_set()])),
        (2, 0) => two_coloring(g).map(|c| RlPartition::new(classes(n, &c).into(), vec![])),
        (0, 2) => {
            two_coloring(&g.complement()).map(|c| RlPartition::new(vec![], classes(n, &c).into()))
        }
        (1, 1) => split_partition(g),
        _ => {
            let mut search = Backtrack::new(g, r, l);
            if search.run(budget)? {
                Some(search.partition())
            } else {
                None
            }
        }
    };
    let found =
        found.map(|p| RlPartition::new(padded(p.independents, r, n), padded(p.cliques, l, n)));
    if let Some(p) = &found {
        assert!(
            verify_partition(g, p),
            "partition search returned an invalid witness"
        );
    }
    Ok(found)
}

/// Vertex-to-block assignment search with forward checking.
///
/// Blocks `0..r` are independent, `r..r+l` are cliques. Placing `v` in an
/// independent block forbids that block to its neighbors; placing it in a
/// clique block forbids the block to its non-neighbors. The vertex with the
/// fewest remaining blocks is assigned next, and within each kind only the
/// lowest empty block may be opened.
struct Backtrack<'a> {
    g: &'a Graph,
    r: usize,
    blocks: usize,
    block_of: Vec<Option<usize>>,
    /// `forbid[v][b]`: assigned vertices that rule out block `b` for `v`.
    forbid: Vec<Vec<u32>>,
    open: Vec<usize>,
    opened: [usize; 2],
}

impl<'a> Backtrack<'a> {
    fn new(g: &'a Graph, r: usize, l: usize) -> Self {
        let n = g.vertex_count();
        Backtrack {
            g,
            r,
            blocks: r + l,
            block_of: vec![None; n],
            forbid: vec![vec![0; r + l]; n],
            open: vec![r + l; n],
            opened: [0, 0],
        }
    }

    fn kind(&self, b: usize) -> usize {
        usize::from(b >= self.r)
    }

    fn pick(&self) -> Option<usize> {
        (0..self.block_of.len())
            .filter(|&v| self.block_of[v].is_none())
            .min_by_key(|&v| (self.open[v], core::cmp::Reverse(self.g.degree(v)), v))
    }

    /// Vertices whose relation to `v` is constrained by placing `v` in `b`.
    fn affected(&self, v: usize, b: usize) -> VertexSet {
        if self.kind(b) == 0 {
            self.g.neighbors(v).clone()
        } else {
            let mut s = self.g.closed_neighbors(v).complement();
            s.remove(v);
            s
        }
    }

    fn place(&mut self, v: usize, b: usize) -> bool {
        self.block_of[v] = Some(b);
        let mut alive = true;
        for u in self.affected(v, b).iter() {
            if self.block_of[u].is_some() {
                continue;
            }
            self.forbid[u][b] += 1;
            if self.forbid[u][b] == 1 {
                self.open[u] -= 1;
                if self.open[u] == 0 {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unplace(&mut self, v: usize, b: usize) {
        self.block_of[v] = None;
        for u in self.affected(v, b).iter() {
            if self.block_of[u].is_some() {
                continue;
            }
            self.forbid[u][b] -= 1;
            if self.forbid[u][b] == 0 {
                self.open[u] += 1;
            }
        }
    }

    fn run(&mut self, budget: &mut dyn Budget) -> Result<bool, Error> {
        tick(budget)?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        for b in 0..self.blocks {
            if self.forbid[v][b] > 0 {
                continue;
            }
            let kind = self.kind(b);
            let index = if kind == 0 { b } else { b - self.r };
            if index > self.opened[kind] {
                continue;
            }
            let before = self.opened[kind];
            self.opened[kind] = before.max(index + 1);
            let alive = self.place(v, b);
            if alive && self.run(budget)? {
                return Ok(true);
            }
            self.unplace(v, b);
            self.opened[kind] = before;
        }
        Ok(false)
    }

    fn partition(&self) -> RlPartition {
        let n = self.block_of.len();
        let mut blocks: Vec<VertexSet> = (0..self.blocks).map(|_| VertexSet::new(n)).collect();
        for (v, b) in self.block_of.iter().enumerate() {
            blocks[b.expect("complete assignment")].insert(v);
        }
        let cliques = blocks.split_off(self.r);
        RlPartition::new(blocks, cliques)
    }
}
