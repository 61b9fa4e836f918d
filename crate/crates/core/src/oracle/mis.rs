use alloc::vec::Vec;

use super::verdict::{VerdictBuilder, WcVerdict};
use crate::bitset::VertexSet;
use crate::budget::{tick, Budget, Caps, Unlimited};
use crate::error::Error;
use crate::graph::Graph;

/// Streams every maximal independent set exactly once.
///
/// This is Bron–Kerbosch with Tomita pivoting run on the complement graph:
/// maximal independent sets of `G` are the maximal cliques of its
/// complement. The order is a deterministic function of the graph.
pub struct MaximalIndependentSets {
    /// `V \ N[v]` for every vertex.
    anti: Vec<VertexSet>,
    stack: Vec<Frame>,
    empty_graph_pending: bool,
}

struct Frame {
    current: VertexSet,
    candidates: VertexSet,
    excluded: VertexSet,
    todo: VertexSet,
}

impl MaximalIndependentSets {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let anti: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v).complement()).collect();
        let mut it = MaximalIndependentSets {
            anti,
            stack: Vec::new(),
            empty_graph_pending: n == 0,
        };
        if n > 0 {
            let candidates = VertexSet::full(n);
            let excluded = VertexSet::new(n);
            let todo = it.branch_set(&candidates, &excluded);
            it.stack.push(Frame {
                current: VertexSet::new(n),
                candidates,
                excluded,
                todo,
            });
        }
        it
    }

    /// Vertices of `candidates` outside the pivot's complement-neighborhood.
    fn branch_set(&self, candidates: &VertexSet, excluded: &VertexSet) -> VertexSet {
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .max_by_key(|&u| {
                (
                    candidates.intersection_len(&self.anti[u]),
                    core::cmp::Reverse(u),
                )
            })
            .expect("pivot taken from a non-empty set");
        candidates.difference(&self.anti[pivot])
    }
}

impl Iterator for MaximalIndependentSets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.empty_graph_pending {
            self.empty_graph_pending = false;
            return Some(VertexSet::new(0));
        }
        loop {
            let frame = self.stack.last_mut()?;
            let Some(v) = frame.todo.first() else {
                self.stack.pop();
                continue;
            };
            frame.todo.remove(v);
            let mut current = frame.current.clone();
            current.insert(v);
            let candidates = frame.candidates.intersection(&self.anti[v]);
            let excluded = frame.excluded.intersection(&self.anti[v]);
            frame.candidates.remove(v);
            frame.excluded.insert(v);

            if candidates.is_empty() {
                if excluded.is_empty() {
                    return Some(current);
                }
                continue;
            }
            let todo = self.branch_set(&candidates, &excluded);
            self.stack.push(Frame {
                current,
                candidates,
                excluded,
                todo,
            });
        }
    }
}

/// Every inclusion-maximal independent set of `g`, once each.
pub fn enumerate_maximal_independent_sets(
    g: &Graph,
    caps: &Caps,
) -> Result<MaximalIndependentSets, Error> {
    Caps::check("vertex count", g.vertex_count(), caps.enum_vertices)?;
    Ok(MaximalIndependentSets::new(g))
}

/// True iff `s` is independent and every other vertex has a neighbor in `s`.
pub fn is_maximal_independent(g: &Graph, s: &VertexSet) -> bool {
    g.is_independent(s)
        && (0..g.vertex_count()).all(|v| s.contains(v) || g.neighbors(v).intersects(s))
}

/// Lowest-index greedy maximal independent set.
pub fn greedy_maximal_independent_set(g: &Graph) -> VertexSet {
    let n = g.vertex_count();
    let mut s = VertexSet::new(n);
    for v in 0..n {
        if !g.neighbors(v).intersects(&s) {
            s.insert(v);
        }
    }
    s
}

/// Well-coveredness by enumerating all maximal independent sets.
pub fn is_well_covered_bruteforce(g: &Graph, caps: &Caps) -> Result<WcVerdict, Error> {
    is_well_covered_bruteforce_with(g, caps, &mut Unlimited)
}

/// As [`is_well_covered_bruteforce`], charging one budget step per set.
pub fn is_well_covered_bruteforce_with(
    g: &Graph,
    caps: &Caps,
    budget: &mut dyn Budget,
) -> Result<WcVerdict, Error> {
    let mut acc = VerdictBuilder::new();
    for s in enumerate_maximal_independent_sets(g, caps)? {
        tick(budget)?;
        acc.offer(&s);
    }
    Ok(acc
        .finish(true)
        .expect("every graph has a maximal independent set"))
}

/// The independence number by branch and bound.
///
/// Branches on the closed neighborhood of a minimum-degree vertex: some
/// maximum independent set contains one of those vertices.
pub fn max_independent_set_size(g: &Graph) -> usize {
    fn go(g: &Graph, alive: &VertexSet, size: usize, best: &mut usize) {
        let left = alive.len();
        if size + left <= *best {
            return;
        }
        if left == 0 {
            *best = size;
            return;
        }
        let v = alive
            .iter()
            .min_by_key(|&u| g.neighbors(u).intersection_len(alive))
            .expect("alive is non-empty");
        let mut choices = g.neighbors(v).intersection(alive);
        choices.insert(v);
        for w in choices.iter() {
            let mut rest = alive.clone();
            rest.difference_with(&g.closed_neighbors(w));
            go(g, &rest, size + 1, best);
        }
    }
    let mut best = 0;
    go(g, &g.vertex_set(), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn all(g: &Graph) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = enumerate_maximal_independent_sets(g, &Caps::default())
            .unwrap()
            .map(|s| s.to_vec())
            .collect();
        v.sort();
        v
    }

    /// Maximal independent sets by checking all 2^n subsets.
    fn subset_oracle(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if is_maximal_independent(g, &VertexSet::from_slice(n, &members)) {
                out.push(members);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_examples() {
        assert_eq!(all(&Graph::complete(3)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(all(&Graph::path(3)), vec![vec![0, 2], vec![1]]);
        let c5 = all(&Graph::cycle(5));
        assert_eq!(c5, subset_oracle(&Graph::cycle(5)));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|s| s.len() == 2));
        assert_eq!(all(&Graph::empty(0)), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn matches_subset_oracle_on_all_graphs_up_to_five_vertices() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                let sets = all(&g);
                let unique: BTreeSet<_> = sets.iter().cloned().collect();
                assert_eq!(unique.len(), sets.len(), "duplicate set on {g:?}");
                assert_eq!(sets, subset_oracle(&g), "on {g:?}");
                let alpha = sets.iter().map(Vec::len).max().unwrap();
                assert_eq!(max_independent_set_size(&g), alpha);
            }
        }
    }

    #[test]
    fn verdict_examples() {
        let caps = Caps::default();
        let k = is_well_covered_bruteforce(&Graph::complete(5), &caps).unwrap();
        assert!(k.well_covered);
        assert_eq!((k.min_size, k.max_size), (1, 1));
        let p = is_well_covered_bruteforce(&Graph::path(3), &caps).unwrap();
        assert!(!p.well_covered);
        assert_eq!(p.witness_min.to_vec(), vec![1]);
        assert_eq!(p.witness_max.to_vec(), vec![0, 2]);
        assert_eq!(p.count_enumerated, Some(2));
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(max_independent_set_size(&Graph::cycle(5)), 2);
        assert_eq!(max_independent_set_size(&Graph::complete(4)), 1);
        assert_eq!(max_independent_set_size(&Graph::empty(3)), 3);
    }

    #[test]
    fn maximality_check() {
        let p3 = Graph::path(3);
        assert!(is_maximal_independent(&p3, &VertexSet::from_slice(3, &[1])));
        assert!(!is_maximal_independent(
            &p3,
            &VertexSet::from_slice(3, &[0])
        ));
        assert!(is_maximal_independent(
            &p3,
            &VertexSet::from_slice(3, &[0, 2])
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps {
            enum_vertices: 4,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_maximal_independent_sets(&Graph::empty(5), &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
