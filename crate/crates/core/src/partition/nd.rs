use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartKind {
    Clique,
    Independent,
}

/// One twin class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdPart {
    pub members: VertexSet,
    pub kind: PartKind,
    /// Number of vertices a maximal independent set takes from this part
    /// whenever it touches it: 1 for cliques, the part size otherwise.
    pub weight: usize,
}

/// Neighborhood-diversity decomposition: the partition of the vertices
/// into twin classes, with the part-level adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdDecomposition {
    pub parts: Vec<NdPart>,
    /// `quotient[i]` holds the indices of the parts complete to part `i`.
    pub quotient: Vec<VertexSet>,
}

impl NdDecomposition {
    /// `nd(G)`.
    pub fn width(&self) -> usize {
        self.parts.len()
    }

    /// Part index of every vertex.
    pub fn part_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for v in p.members.iter() {
                out[v] = i;
            }
        }
        out
    }
}

/// Twin classes of `g`.
///
/// `u` and `v` are twins when `N(u) \ {v} = N(v) \ {u}`. Non-adjacent twins
/// share their open neighborhood and adjacent twins their closed one, and a
/// vertex cannot have twins of both sorts, so grouping vertices by those two
/// keys yields the classes. Parts are ordered by their smallest vertex.
pub fn nd_decompose(g: &Graph) -> NdDecomposition {
    let n = g.vertex_count();
    let mut open: BTreeMap<&[u64], Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        open.entry(g.neighbors(v).words()).or_default().push(v);
    }
    let closed_sets: Vec<VertexSet> = (0..n).map(|v| g.closed_neighbors(v)).collect();
    let mut closed: BTreeMap<&[u64], Vec<usize>> = BTreeMap::new();
    for (v, s) in closed_sets.iter().enumerate() {
        closed.entry(s.words()).or_default().push(v);
    }

    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<NdPart> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let false_twins = &open[g.neighbors(v).words()];
        let true_twins = &closed[closed_sets[v].words()];
        let (members, kind) = if false_twins.len() > 1 {
            (false_twins, PartKind::Independent)
        } else if true_twins.len() > 1 {
            (true_twins, PartKind::Clique)
        } else {
            (false_twins, PartKind::Independent)
        };
        let index = parts.len();
        for &u in members {
            part_of[u] = index;
        }
        let weight = match kind {
            PartKind::Clique => 1,
            PartKind::Independent => members.len(),
        };
        parts.push(NdPart {
            members: VertexSet::from_slice(n, members),
            kind,
            weight,
        });
    }

    let t = parts.len();
    let quotient = parts
        .iter()
        .map(|p| {
            let rep = p.members.first().expect("parts are non-empty");
            let mut row = VertexSet::new(t);
            for u in g.neighbors(rep).iter() {
                if part_of[u] != part_of[rep] {
                    row.insert(part_of[u]);
                }
            }
            row
        })
        .collect();
    NdDecomposition { parts, quotient }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;
    use proptest::prelude::*;

    fn twins(g: &Graph, u: usize, v: usize) -> bool {
        let mut a = g.neighbors(u).clone();
        a.remove(v);
        let mut b = g.neighbors(v).clone();
        b.remove(u);
        a == b
    }

    #[test]
    fn examples() {
        let k = nd_decompose(&Graph::complete(4));
        assert_eq!(k.width(), 1);
        assert_eq!(k.parts[0].kind, PartKind::Clique);
        assert_eq!(k.parts[0].weight, 1);

        let kb = nd_decompose(&Graph::complete_bipartite(2, 3));
        assert_eq!(kb.width(), 2);
        let weights: Vec<usize> = kb.parts.iter().map(|p| p.weight).collect();
        assert_eq!(weights, vec![2, 3]);
        assert!(kb.parts.iter().all(|p| p.kind == PartKind::Independent));
        assert!(kb.quotient[0].contains(1));

        let c5 = nd_decompose(&Graph::cycle(5));
        assert_eq!(c5.width(), 5);
        assert!(c5
            .parts
            .iter()
            .all(|p| p.members.len() == 1 && p.weight == 1));
        assert!(c5.parts.iter().all(|p| p.kind == PartKind::Independent));
    }

    #[test]
    fn complete_multipartite_has_one_part_per_side() {
        for sides in [vec![1, 2, 3], vec![2, 2], vec![3, 1, 1, 4]] {
            let n: usize = sides.iter().sum();
            let side_of: Vec<usize> = sides
                .iter()
                .enumerate()
                .flat_map(|(i, &s)| core::iter::repeat_n(i, s))
                .collect();
            let mut b = GraphBuilder::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if side_of[u] != side_of[v] {
                        b.add_edge(u, v).unwrap();
                    }
                }
            }
            let d = nd_decompose(&b.build());
            // Singleton sides are true twins of each other, so they merge.
            let singletons = sides.iter().filter(|&&s| s == 1).count();
            let expected = sides.len() - singletons + usize::from(singletons > 0);
            assert_eq!(d.width(), expected, "{sides:?}");
        }
    }

    proptest! {
        #[test]
        fn parts_are_exact_twin_classes(g in crate::graph::tests::arb_graph(9)) {
            let d = nd_decompose(&g);
            let n = g.vertex_count();
            let part = d.part_of(n);
            for u in 0..n {
                for v in u + 1..n {
                    prop_assert_eq!(part[u] == part[v], twins(&g, u, v), "{} {}", u, v);
                }
            }
            for (i, p) in d.parts.iter().enumerate() {
                match p.kind {
                    PartKind::Clique => prop_assert!(g.is_clique(&p.members) && p.weight == 1),
                    PartKind::Independent => {
                        prop_assert!(g.is_independent(&p.members));
                        prop_assert_eq!(p.weight, p.members.len());
                    }
                }
                for j in 0..d.width() {
                    if i == j { continue; }
                    let complete = p.members.iter().all(|u| d.parts[j].members.is_subset(g.neighbors(u)));
                    let empty = p.members.iter().all(|u| !d.parts[j].members.intersects(g.neighbors(u)));
                    prop_assert!(complete || empty);
                    prop_assert_eq!(d.quotient[i].contains(j), complete && !empty);
                }
            }
        }
    }
}
