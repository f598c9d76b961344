//! Dense undirected simple graphs with bitset adjacency rows.
//!
//! A [`Graph`] is an immutable value: edge insertion and removal return new
//! graphs. Rows are packed into 64-bit words, so graphs with at most 64
//! vertices use exactly one word per row.

use std::fmt;

use crate::bits::{self, Ones};
use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold in memory.
///
/// Serialized forms (graph6, cache records) stay limited to 62 vertices.
pub const MAX_VERTICES: usize = 1024;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

/// Number of neighbours of a vertex inside and outside a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetEdges {
    pub inner: usize,
    pub outer: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let words = bits::words_for(n);
        Ok(Graph {
            n,
            words,
            adj: vec![0; n * words],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        Ok(g)
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.insert(u, v);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.insert(v - 1, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.insert(n - 1, 0);
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.adj) / 2
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bits::test(self.row(u), v)
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Number of common neighbours of the endpoints of the edge `xy`.
    pub fn triangles_on_edge(&self, x: usize, y: usize) -> Result<usize> {
        self.check_edge(x, y)?;
        Ok(self.common_neighbors(x, y))
    }

    #[inline]
    pub(crate) fn common_neighbors(&self, x: usize, y: usize) -> usize {
        bits::count_and(self.row(x), self.row(y))
    }

    /// Splits the neighbourhood of `v` into edges landing inside `set` and
    /// edges leaving it. `v` must itself belong to `set`.
    pub fn edges_to_set(&self, v: usize, set: &[usize]) -> Result<SetEdges> {
        self.check_vertex(v)?;
        let mut mask = vec![0u64; self.words];
        for &u in set {
            self.check_vertex(u)?;
            bits::set(&mut mask, u);
        }
        if !bits::test(&mask, v) {
            return Err(Error::NotInSet(v));
        }
        let inner = bits::count_and(self.row(v), &mask);
        Ok(SetEdges {
            inner,
            outer: self.deg(v) - inner,
        })
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.remove(u, v);
        Ok(g)
    }

    /// Same graph with `k` isolated vertices appended.
    pub fn with_isolated(&self, k: usize) -> Result<Graph> {
        let mut g = Graph::empty(self.n + k)?;
        for (u, v) in self.edges() {
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Disjoint union, with `other` relabelled to `self.n..`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.with_isolated(other.n)?;
        for (u, v) in other.edges() {
            g.insert(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Graph whose vertex `perm[v]` plays the role of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::OutOfRange(format!("{p} repeats in permutation")));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.insert(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Number of connected components (isolated vertices count).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::set(&mut self.adj[u * w..(u + 1) * w], v);
        bits::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    #[inline]
    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        let w = self.words;
        bits::clear(&mut self.adj[u * w..(u + 1) * w], v);
        bits::clear(&mut self.adj[v * w..(v + 1) * w], u);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_edge(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.has_edge(u, v) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(u, v))
        }
    }

    /// Checks the row invariants: no loops, symmetry, no stray high bits.
    pub fn is_well_formed(&self) -> bool {
        for v in 0..self.n {
            let row = self.row(v);
            if bits::test(row, v) {
                return false;
            }
            for u in Ones::new(row) {
                if u >= self.n || !bits::test(self.row(u), v) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k5_minus_01() -> Graph {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(5, &edges).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let tri = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert_eq!(Graph::from_edge_list(2, &[]).unwrap().edge_count(), 0);
        assert_eq!(k5_minus_01().degrees(), vec![3, 3, 4, 4, 4]);
        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(Graph::empty(0), Err(Error::VertexCount(0)));
        assert!(Graph::empty(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn degree_examples() {
        let tri = Graph::complete(3).unwrap();
        assert_eq!(tri.degree(0), Ok(2));
        let k24 = Graph::complete_bipartite(2, 4).unwrap();
        assert_eq!(k24.degree(0), Ok(4));
        assert!(tri.degree(3).is_err());
    }

    #[test]
    fn triangles_on_edge_examples() {
        assert_eq!(Graph::complete(3).unwrap().triangles_on_edge(0, 1), Ok(1));
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        for (u, v) in k23.edges() {
            assert_eq!(k23.triangles_on_edge(u, v), Ok(0));
        }
        assert_eq!(k23.triangles_on_edge(0, 1), Err(Error::NotAnEdge(0, 1)));
    }

    #[test]
    fn edges_to_set_examples() {
        let tri = Graph::complete(3).unwrap();
        assert_eq!(
            tri.edges_to_set(0, &[0, 1]),
            Ok(SetEdges { inner: 1, outer: 1 })
        );
        let k24 = Graph::complete_bipartite(2, 4).unwrap();
        assert_eq!(
            k24.edges_to_set(0, &[0, 1]),
            Ok(SetEdges { inner: 0, outer: 4 })
        );
        // vertex 2 of K5 - 01 sees 0 and 1 inside, 3 and 4 outside
        assert_eq!(
            k5_minus_01().edges_to_set(2, &[0, 1, 2]),
            Ok(SetEdges { inner: 2, outer: 2 })
        );
        assert_eq!(tri.edges_to_set(2, &[0, 1]), Err(Error::NotInSet(2)));
    }

    #[test]
    fn wide_graphs_span_several_words() {
        let g = Graph::cycle(150).unwrap();
        assert_eq!(g.edge_count(), 150);
        assert!(g.has_edge(149, 0));
        assert!(g.has_edge(63, 64));
        assert_eq!(g.degrees().iter().sum::<usize>(), 300);
        assert!(g.is_well_formed());
        assert_eq!(g.component_count(), 1);
    }

    #[test]
    fn edits_return_new_values() {
        let p = Graph::path(4).unwrap();
        let c = p.with_edge(3, 0).unwrap();
        assert_eq!(p.edge_count(), 3);
        assert_eq!(c, Graph::cycle(4).unwrap());
        assert_eq!(c.without_edge(0, 3).unwrap(), p);
        assert!(p.without_edge(0, 3).is_err());
    }

    #[test]
    fn relabel_and_union() {
        let p = Graph::path(3).unwrap();
        let q = p.relabel(&[1, 0, 2]).unwrap();
        assert!(q.has_edge(1, 0) && q.has_edge(0, 2) && !q.has_edge(1, 2));
        assert!(p.relabel(&[0, 0, 1]).is_err());
        let two = p.disjoint_union(&p).unwrap();
        assert_eq!(two.vertex_count(), 6);
        assert_eq!(two.edge_count(), 4);
        assert_eq!(two.component_count(), 2);
    }
}
