//! Immutable undirected simple graphs and the combinators the reductions
//! are assembled from.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::Error;

/// An undirected simple graph on the vertices `0..n`.
///
/// Adjacency rows are bit sets, so neighbor lists are always sorted and free
/// of duplicates. Vertices may carry text labels that record where a gadget
/// vertex came from (`"u_3"`, `"v_4[2]"`, `"t_1"`, ...).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Mutable edge accumulator that freezes into a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
            labels: None,
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let mut b = GraphBuilder::new(labels.len());
        b.labels = Some(labels);
        b
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds `uv`. Parallel edges collapse; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!(
                "edge {u}-{v} outside vertex range 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Infallible variant for constructions whose endpoints are known valid.
    pub(crate) fn edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn build(self) -> Graph {
        let g = Graph {
            adj: self.adj,
            labels: self.labels,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.edge(u, v);
            }
        }
        b.build()
    }

    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.edge(v - 1, v);
        }
        b.build()
    }

    /// The cycle `0-1-..-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.edge(v, (v + 1) % n);
        }
        b.build()
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = GraphBuilder::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.edge(u, v);
            }
        }
        g.build()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`; unlabeled vertices are named by their index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    fn label_vec(&self) -> Vec<String> {
        (0..self.vertex_count()).map(|v| self.label(v)).collect()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
        self
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter().all(|v| self.adj[v].intersection_len(s) == k - 1)
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    /// Checks symmetry and the absence of self-loops.
    pub fn check_invariants(&self) -> Result<(), Error> {
        let n = self.vertex_count();
        if let Some(l) = &self.labels {
            if l.len() != n {
                return Err(Error::InvalidGraph(
                    "label count differs from vertex count".into(),
                ));
            }
        }
        for (v, row) in self.adj.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvalidGraph(format!(
                    "row {v} has the wrong universe"
                )));
            }
            if row.contains(v) {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {v}")));
            }
            if let Some(u) = row.iter().find(|&u| !self.adj[u].contains(v)) {
                return Err(Error::InvalidGraph(format!(
                    "edge {v}-{u} is not symmetric"
                )));
            }
        }
        Ok(())
    }

    /// Subgraph induced by `s`, with vertices renumbered in ascending order.
    /// Also returns the map from new to old indices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut b = GraphBuilder::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.edge(i, j);
                }
            }
        }
        if self.labels.is_some() {
            b.labels = Some(map.iter().map(|&v| self.label(v)).collect());
        }
        (b.build(), map)
    }

    /// Renumbers vertices: old vertex `order[i]` becomes `i`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        let n = self.vertex_count();
        assert_eq!(order.len(), n);
        let mut position = alloc::vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        assert!(
            position.iter().all(|&p| p != usize::MAX),
            "not a permutation"
        );
        let mut b = GraphBuilder::new(n);
        for (u, v) in self.edges() {
            b.edge(position[u], position[v]);
        }
        if self.labels.is_some() {
            b.labels = Some(order.iter().map(|&v| self.label(v)).collect());
        }
        b.build()
    }

    /// The complement graph; labels are kept.
    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let (n1, n2) = (self.vertex_count(), other.vertex_count());
        let mut b = GraphBuilder::new(n1 + n2);
        for (u, v) in self.edges() {
            b.edge(u, v);
        }
        for (u, v) in other.edges() {
            b.edge(n1 + u, n1 + v);
        }
        if cross {
            for u in 0..n1 {
                for v in 0..n2 {
                    b.edge(u, n1 + v);
                }
            }
        }
        if self.labels.is_some() || other.labels.is_some() {
            let mut labels = self.label_vec();
            labels.extend(other.label_vec());
            b.labels = Some(labels);
        }
        b.build()
    }

    /// Attaches a new degree-one vertex `p_<label>` to every vertex. Vertex
    /// `v`'s pendant gets index `n + v`.
    pub fn add_pendants(&self) -> Graph {
        let n = self.vertex_count();
        let mut labels = self.label_vec();
        labels.extend((0..n).map(|v| format!("p_{}", self.label(v))));
        let mut b = GraphBuilder::with_labels(labels);
        for (u, v) in self.edges() {
            b.edge(u, v);
        }
        for v in 0..n {
            b.edge(v, n + v);
        }
        b.build()
    }

    /// Whether the edge `uv` lies on a triangle.
    pub fn edge_in_triangle(&self, u: usize, v: usize) -> bool {
        self.adj[u].intersects(&self.adj[v])
    }

    /// For every edge `uv` on no triangle, adds a vertex `x(u,v)` adjacent to
    /// exactly `u` and `v`. New vertices follow the original ones in edge order.
    pub fn triangle_augment(&self) -> Graph {
        let n = self.vertex_count();
        let lonely: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(u, v)| !self.edge_in_triangle(u, v))
            .collect();
        let mut labels = self.label_vec();
        labels.extend(
            lonely
                .iter()
                .map(|&(u, v)| format!("x({},{})", self.label(u), self.label(v))),
        );
        let mut b = GraphBuilder::with_labels(labels);
        for (u, v) in self.edges() {
            b.edge(u, v);
        }
        for (i, &(u, v)) in lonely.iter().enumerate() {
            b.edge(n + i, u);
            b.edge(n + i, v);
        }
        let mut g = b.build();
        if self.labels.is_none() && lonely.is_empty() {
            g.labels = None;
        }
        g
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &edges)
            .finish()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut b = GraphBuilder::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            b.edge(u, v);
                        }
                        k += 1;
                    }
                }
                b.build()
            })
        })
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().complement(), p4);
        // C5's complement is the cycle 0-2-4-1-3-0.
        let c = Graph::cycle(5).complement();
        let expected = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn union_and_join_examples() {
        let two_k1 = Graph::empty(1).disjoint_union(&Graph::empty(1));
        assert_eq!(two_k1, Graph::empty(2));
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!((two_k3.vertex_count(), two_k3.edge_count()), (6, 6));
        let u = Graph::cycle(4).disjoint_union(&Graph::complete(3));
        assert_eq!((u.vertex_count(), u.edge_count()), (7, 7));

        assert_eq!(Graph::empty(1).join(&Graph::empty(1)), Graph::complete(2));
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(c4, Graph::complete_bipartite(2, 2));
        assert_eq!(
            Graph::complete(2).join(&Graph::complete(2)),
            Graph::complete(4)
        );
    }

    #[test]
    fn pendant_examples() {
        assert_eq!(
            Graph::empty(1).add_pendants().edges().collect::<Vec<_>>(),
            vec![(0, 1)]
        );
        let cat = Graph::path(3).add_pendants();
        let mut degrees = cat.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![3, 2, 2, 1, 1, 1]);
        assert_eq!(cat.label(4), "p_1");
        let c4 = Graph::cycle(4).add_pendants();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (8, 8));
    }

    #[test]
    fn triangle_augment_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.triangle_augment(), k3);
        let k2 = Graph::complete(2).triangle_augment();
        assert_eq!(k2.vertex_count(), 3);
        assert_eq!(k2.edge_count(), 3);
        assert_eq!(k2.label(2), "x(0,1)");
        let p3 = Graph::path(3).triangle_augment();
        assert_eq!((p3.vertex_count(), p3.edge_count()), (5, 6));
        assert_eq!(
            edge_list(&p3),
            vec![(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 4)]
        );
    }

    #[test]
    fn triangle_augment_second_pass_is_stable_on_k2() {
        let once = Graph::complete(2).triangle_augment();
        let twice = once.triangle_augment();
        assert_eq!(once, twice);
    }

    #[test]
    fn builder_rejects_loops_and_range() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        let g = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    proptest! {
        #[test]
        fn combinator_edge_counts(g1 in arb_graph(7), g2 in arb_graph(7)) {
            let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
            let u = g1.disjoint_union(&g2);
            let j = g1.join(&g2);
            prop_assert!(u.check_invariants().is_ok());
            prop_assert!(j.check_invariants().is_ok());
            prop_assert_eq!(u.edge_count(), g1.edge_count() + g2.edge_count());
            prop_assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + n1 * n2);
        }

        #[test]
        fn complement_is_involution(g in arb_graph(9)) {
            let c = g.complement();
            prop_assert!(c.check_invariants().is_ok());
            let n = g.vertex_count();
            prop_assert_eq!(c.edge_count() + g.edge_count(), n * (n - 1) / 2);
            prop_assert_eq!(c.complement(), g);
        }

        #[test]
        fn pendant_degrees(g in arb_graph(8)) {
            let n = g.vertex_count();
            let h = g.add_pendants();
            prop_assert!(h.check_invariants().is_ok());
            prop_assert_eq!(h.vertex_count(), 2 * n);
            for v in 0..n {
                prop_assert_eq!(h.degree(v), g.degree(v) + 1);
                prop_assert_eq!(h.degree(n + v), 1);
            }
        }

        #[test]
        fn augmented_edges_all_on_triangles(g in arb_graph(8)) {
            let h = g.triangle_augment();
            prop_assert!(h.check_invariants().is_ok());
            let n = g.vertex_count();
            for (u, v) in g.edges() {
                prop_assert!(h.edge_in_triangle(u, v));
            }
            for x in n..h.vertex_count() {
                prop_assert_eq!(h.degree(x), 2);
            }
        }
    }
}
