//! Undirected simple graphs on dense vertex labels `0..n`, stored as one
//! adjacency bit row per vertex.

mod canon;
mod clique;
pub mod io;
pub mod named;

pub use canon::{automorphism_count, canonical_code, non_isomorphic_graphs, CanonCode};
pub use clique::{CliqueCount, JointReport, KstCheck};

use crate::bitset::VertexSet;
use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, rows: vec![VertexSet::new(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return domain(format!("edge ({u}, {v}) out of range for n = {n}"));
            }
            if u == v {
                return domain(format!("self-loop at vertex {u}"));
            }
            if g.has_edge(u, v) {
                return domain(format!("repeated edge ({u}, {v})"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        for (u, row) in rows.iter().enumerate() {
            if row.contains(u) {
                return domain(format!("self-loop at vertex {u}"));
            }
            for v in row.iter() {
                if v >= n {
                    return domain(format!("row {u} names vertex {v} >= n = {n}"));
                }
                if !rows[v].contains(u) {
                    return domain(format!("adjacency is not symmetric at ({u}, {v})"));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    /// Inserts the edge `uv`. Panics on a loop or out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge ({u}, {v})");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Minimum degree; 0 for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut row = self.rows[u].clone();
            row.retain_above(u);
            row.to_vec().into_iter().map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let rows = (0..self.n)
            .map(|v| {
                let mut r = full.difference(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = VertexSet::new(self.n);
        for &v in vertices {
            if v >= self.n {
                return domain(format!("vertex {v} out of range for n = {}", self.n));
            }
            if seen.contains(v) {
                return domain(format!("vertex {v} listed twice"));
            }
            seen.insert(v);
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Deletes vertex `v`, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return domain(format!("vertex {v} out of range for n = {}", self.n));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.rows[v].is_empty()).collect()
    }

    /// Drops isolated vertices, keeping the relative order of the rest.
    pub fn strip_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !self.rows[v].is_empty()).collect();
        self.induced_subgraph(&keep).expect("labels are distinct and in range")
    }

    /// Vertex `i` becomes an independent set of `sizes[i]` vertices; blocks
    /// are laid out consecutively and adjacency between blocks is inherited.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Graph> {
        if sizes.len() != self.n {
            return domain(format!("{} part sizes given for {} vertices", sizes.len(), self.n));
        }
        let mut offsets = Vec::with_capacity(self.n + 1);
        let mut total = 0usize;
        for &s in sizes {
            offsets.push(total);
            total += s;
        }
        offsets.push(total);
        let mut g = Graph::empty(total);
        for (u, v) in self.edges() {
            for a in offsets[u]..offsets[u + 1] {
                for b in offsets[v]..offsets[v + 1] {
                    g.add_edge(a, b);
                }
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for u in self.rows[v].iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.len() == self.n
    }

    /// Applies the relabeling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edge_list() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, &repr.edges).map_err(serde::de::Error::custom)
    }
}
