//! Simple undirected graphs on vertices `0..n` with bitset adjacency rows.
//!
//! Edges are indexed `0..m` in lexicographic order of their endpoint pairs
//! `(u, v)`, `u < v`. The order is fixed at construction so that colorings,
//! certificates and DOT output are reproducible byte for byte.

use serde::Serialize;

use crate::error::{invalid, Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

/// An edge of a particular graph: its index and endpoints with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeRef {
    pub index: usize,
    pub u: usize,
    pub v: usize,
}

/// Connected components: `assignment[v]` is the component id of `v`, ids are
/// contiguous from 0 and ordered by the smallest vertex they contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub assignment: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn largest(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of component `id`, ascending.
    pub fn members(&self, id: usize) -> Vec<usize> {
        (0..self.assignment.len())
            .filter(|&v| self.assignment[v] == id)
            .collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Endpoint order within a pair does not
    /// matter; loops and repeated pairs are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(invalid(format!("loop at vertex {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if g.has_edge(u, v) {
                return Err(invalid(format!("repeated edge ({u}, {v})")));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
            list.push((u, v));
        }
        list.sort_unstable();
        g.edges = list;
        Ok(g)
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / WORD] |= 1u64 << (v % WORD);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// The adjacency row of `v` as raw 64-bit words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Neighbour set of `v` as a single word; only meaningful when `n <= 64`.
    pub fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.adj[v * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * WORD + b)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge(&self, index: usize) -> Result<EdgeRef> {
        let &(u, v) = self.edges.get(index).ok_or(Error::EdgeOutOfRange {
            index,
            m: self.m(),
        })?;
        Ok(EdgeRef { index, u, v })
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).ok()
    }

    /// Non-adjacent pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if self.has_edge(u, v) {
            return Err(invalid(format!("({u}, {v}) is already an edge")));
        }
        Graph::from_edges(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let idx = self
            .edge_index(u, v)
            .ok_or_else(|| invalid(format!("({u}, {v}) is not an edge")))?;
        Ok(self.spanning_subgraph(|i| i != idx))
    }

    /// Spanning subgraph keeping the edges whose index satisfies `keep`.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Graph {
        let edges: Vec<_> = (0..self.m())
            .filter(|&i| keep(i))
            .map(|i| self.edges[i])
            .collect();
        Graph::from_edges(self.n, edges).expect("subset of a simple graph is simple")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(invalid("permutation length differs from n"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("not a permutation"));
            }
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off))),
        )
        .expect("union of simple graphs is simple")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(invalid("a cycle needs at least 3 vertices"));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// `K_{1, n-1}` with centre 0.
    pub fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    /// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Number of triangles containing edge `index`, i.e. `|N(u) ∩ N(v)|`.
    pub fn triangles_through_edge(&self, index: usize) -> Result<usize> {
        let e = self.edge(index)?;
        Ok(self.common_neighbor_count(e.u, e.v))
    }

    pub fn triangle_count(&self) -> usize {
        self.edges
            .iter()
            .map(|&(u, v)| self.common_neighbor_count(u, v))
            .sum::<usize>()
            / 3
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.common_neighbor_count(u, v) == 0)
    }

    pub fn components(&self) -> ComponentPartition {
        const UNSEEN: usize = usize::MAX;
        let mut assignment = vec![UNSEEN; self.n];
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if assignment[s] != UNSEEN {
                continue;
            }
            let id = sizes.len();
            assignment[s] = id;
            stack.push(s);
            let mut size = 0;
            while let Some(x) = stack.pop() {
                size += 1;
                for y in self.neighbors(x) {
                    if assignment[y] == UNSEEN {
                        assignment[y] = id;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        ComponentPartition { assignment, sizes }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count() <= 1
    }

    /// Cut vertices, ascending (iterative lowpoint DFS).
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent, remaining neighbours)
            let mut stack: Vec<(usize, usize, Vec<usize>)> =
                vec![(root, usize::MAX, self.neighbors(root).collect())];
            while let Some((x, parent, pending)) = stack.last_mut() {
                let (x, parent) = (*x, *parent);
                if let Some(y) = pending.pop() {
                    if disc[y] == usize::MAX {
                        disc[y] = timer;
                        low[y] = timer;
                        timer += 1;
                        if x == root {
                            root_children += 1;
                        }
                        stack.push((y, x, self.neighbors(y).collect()));
                    } else if y != parent {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[x]);
                        if parent != root && low[x] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// At least 3 vertices, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_k3() -> Graph {
        Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn edges_are_sorted_and_indexed() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_index(u, v), Some(i));
            assert_eq!(g.edge_index(v, u), Some(i));
        }
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn rejects_loops_repeats_and_range() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn triangle_counts() {
        let k4 = Graph::complete(4);
        for i in 0..k4.m() {
            assert_eq!(k4.triangles_through_edge(i).unwrap(), 2);
        }
        let p = Graph::petersen();
        assert_eq!(p.m(), 15);
        for i in 0..p.m() {
            assert_eq!(p.triangles_through_edge(i).unwrap(), 0);
        }
        assert!(matches!(
            p.triangles_through_edge(15),
            Err(Error::EdgeOutOfRange { index: 15, m: 15 })
        ));
    }

    #[test]
    fn component_examples() {
        let c = Graph::empty(3).components();
        assert_eq!(c.sizes, vec![1, 1, 1]);
        let c = k2_k3().components();
        assert_eq!(c.sizes, vec![2, 3]);
        assert_eq!(c.assignment, vec![0, 0, 1, 1, 1]);
        assert_eq!(c.members(1), vec![2, 3, 4]);
        assert_eq!(Graph::empty(0).components().count(), 0);
    }

    #[test]
    fn triangle_free_examples() {
        assert!(Graph::cycle(5).unwrap().is_triangle_free());
        assert!(!Graph::complete(3).is_triangle_free());
        assert!(Graph::petersen().is_triangle_free());
        assert!(Graph::empty(0).is_triangle_free());
    }

    #[test]
    fn two_connectivity_examples() {
        assert!(Graph::cycle(4).unwrap().is_two_connected());
        assert!(!Graph::star(5).is_two_connected());
        assert_eq!(Graph::star(5).articulation_points(), vec![0]);
        assert!(Graph::petersen().is_two_connected());
        assert!(!Graph::complete(2).is_two_connected());
        assert!(!k2_k3().is_two_connected());
        assert_eq!(Graph::path(4).articulation_points(), vec![1, 2]);
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let g = Graph::path(130);
        assert_eq!(g.m(), 129);
        assert!(g.has_edge(63, 64) && g.has_edge(128, 129));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
        assert_eq!(g.articulation_points().len(), 128);
        assert!(g.is_connected());
    }

    #[test]
    fn edit_operations() {
        let c4 = Graph::cycle(4).unwrap();
        let g = c4.with_edge(0, 2).unwrap();
        assert_eq!(g.m(), 5);
        assert!(c4.with_edge(0, 1).is_err());
        assert_eq!(g.without_edge(2, 0).unwrap(), c4);
        assert_eq!(c4.non_edges(), vec![(0, 2), (1, 3)]);
        let r = c4.relabel(&[1, 2, 3, 0]).unwrap();
        assert_eq!(r.m(), 4);
        assert!(c4.relabel(&[0, 0, 1, 2]).is_err());
    }
}
