use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// A proper coloring with at most `k` colors, if one exists.
///
/// Exact DSATUR-style backtracking: always colors a vertex with the most
/// distinct colors in its neighborhood, checks that no uncolored neighbor
/// runs out of colors, and only ever opens the lowest unused color.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Vec<usize>> {
    assert!(k >= 1, "k must be positive");
    let n = g.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut search = Search {
        g,
        k,
        color: vec![None; n],
        blocked: vec![vec![0u32; k]; n],
        saturation: vec![0; n],
        used: 0,
    };
    if search.run() {
        Some(
            search
                .color
                .into_iter()
                .map(|c| c.expect("all colored"))
                .collect(),
        )
    } else {
        None
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
    /// `blocked[v][c]`: colored neighbors of `v` that carry color `c`.
    blocked: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    used: usize,
}

impl Search<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), core::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = Some(c);
        let mut alive = true;
        for u in self.g.neighbors(v).iter() {
            if self.color[u].is_some() {
                continue;
            }
            self.blocked[u][c] += 1;
            if self.blocked[u][c] == 1 {
                self.saturation[u] += 1;
                if self.saturation[u] == self.k {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for u in self.g.neighbors(v).iter() {
            if self.color[u].is_some() {
                continue;
            }
            self.blocked[u][c] -= 1;
            if self.blocked[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn run(&mut self) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let limit = (self.used + 1).min(self.k);
        for c in 0..limit {
            if self.blocked[v][c] > 0 {
                continue;
            }
            let before = self.used;
            self.used = self.used.max(c + 1);
            let alive = self.assign(v, c);
            if alive && self.run() {
                return true;
            }
            self.unassign(v, c);
            self.used = before;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proper(g: &Graph, colors: &[usize], k: usize) -> bool {
        colors.iter().all(|&c| c < k) && g.edges().all(|(u, v)| colors[u] != colors[v])
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        let col = is_k_colorable(&c5, 3).unwrap();
        assert!(proper(&c5, &col, 3));
        assert!(is_k_colorable(&c5, 2).is_none());
        assert!(is_k_colorable(&Graph::complete(4), 3).is_none());
        assert!(is_k_colorable(&Graph::empty(3), 1).is_some());
    }

    #[test]
    fn agrees_with_assignment_enumeration() {
        // All graphs on 5 vertices against trying all 3^5 colorings.
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            for k in 1..=3usize {
                let brute = (0..k.pow(5)).any(|code| {
                    let cols: Vec<usize> = (0..5).map(|i| code / k.pow(i as u32) % k).collect();
                    proper(&g, &cols, k)
                });
                let found = is_k_colorable(&g, k);
                assert_eq!(found.is_some(), brute, "k={k} on {g:?}");
                if let Some(c) = found {
                    assert!(proper(&g, &c, k));
                }
            }
        }
    }
}
