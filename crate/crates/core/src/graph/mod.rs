//! Finite simple undirected graphs with dense vertex ids.
//!
//! A [`Graph`] is immutable once built. Edges are stored as `(u, v)` with
//! `u < v` in lexicographic order, so iteration order is deterministic and two
//! graphs are equal exactly when they have the same vertex count and edge set.

mod bipartite;
mod dot;
mod enumerate;
mod graph6;
mod ops;

use std::collections::VecDeque;

use thiserror::Error;

pub use bipartite::Bipartiteness;
pub use dot::to_dot;
pub use enumerate::{enumerate_graphs, enumerate_graphs_with_cap, GraphFilter, GraphStream, DEFAULT_ENUMERATION_CAP};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, Graph6ErrorKind};
pub use ops::{
    complement, contract_edge, corona, delete_edge, delete_vertex, induced_subgraph, join,
    line_graph, product, reduce_vertex, rooted_product, subdivide_edge, total_graph, union,
    Contraction, CoronaGraph, CoronaVertex, Element, InducedSubgraph, LineGraph, MinorStep,
    ProductGraph, ProductKind, Reduction, RootedGraph, Subdivision, TotalGraph, UnionGraph,
};

/// An unordered edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("inconsistent vertex correspondence: {0}")]
    InconsistentCorrespondence(String),
    #[error("vertex {v} cannot be reduced: {reason}")]
    NotReducible { v: usize, reason: String },
    #[error("enumeration of {n}-vertex graphs exceeds the cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },
}

/// Result of [`Graph::build`]: the canonical graph plus any duplicate input
/// edges that were collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built {
    pub graph: Graph,
    pub collapsed_duplicates: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

pub(crate) fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges (in either orientation).
    pub fn build<I>(n: usize, edges: I) -> Result<Built, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push(normalize(u, v));
        }
        list.sort_unstable();
        let mut collapsed_duplicates = Vec::new();
        list.dedup_by(|a, b| {
            let dup = a == b;
            if dup {
                collapsed_duplicates.push(*a);
            }
            dup
        });
        Ok(Built {
            graph: Graph::from_canonical(n, list),
            collapsed_duplicates,
        })
    }

    /// Like [`Graph::build`] but discards the duplicate report.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        Self::build(n, edges).map(|b| b.graph)
    }

    /// `edges` must already be normalized, sorted, deduplicated and in range.
    pub(crate) fn from_canonical(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Sorts and deduplicates arbitrary in-range, loop-free edges.
    pub(crate) fn from_unsorted(n: usize, mut edges: Vec<Edge>) -> Graph {
        for e in &mut edges {
            *e = normalize(e.0, e.1);
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_canonical(n, edges)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_canonical(n, Vec::new())
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_canonical(n, edges)
    }

    /// Path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        Graph::from_canonical(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        let mut edges: Vec<Edge> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_unsorted(n, edges)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_canonical(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_canonical(a + b, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&normalize(u, v)).ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    pub(crate) fn check_edge(&self, u: usize, v: usize) -> Result<Edge, GraphError> {
        if self.has_edge(u, v) {
            Ok(normalize(u, v))
        } else {
            Err(GraphError::MissingEdge(u, v))
        }
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// Connected in the usual sense; the graph on zero vertices counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_bipartite(&self) -> Bipartiteness {
        bipartite::two_color(self)
    }

    /// Checks that `map` (vertex of `self` to vertex of `other`) is a graph
    /// isomorphism.
    pub fn is_isomorphism(&self, other: &Graph, map: &[usize]) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() || map.len() != self.n {
            return false;
        }
        let mut hit = vec![false; other.n];
        for &t in map {
            if t >= other.n || hit[t] {
                return false;
            }
            hit[t] = true;
        }
        self.edges.iter().all(|&(u, v)| other.has_edge(map[u], map[v]))
    }

    /// Number of unordered pairs of edges sharing an endpoint.
    pub fn adjacent_edge_pairs(&self) -> usize {
        self.adj.iter().map(|a| a.len() * a.len().saturating_sub(1) / 2).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2, Graph::complete(2));
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn duplicates_are_collapsed_and_reported() {
        let built = Graph::build(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(built.graph.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(built.collapsed_duplicates, vec![(0, 1)]);
    }

    #[test]
    fn named_families() {
        assert_eq!(Graph::cycle(4).edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(Graph::path(3).edge_count(), 2);
        assert_eq!(Graph::star(3).degree(0), 3);
        assert_eq!(Graph::complete_bipartite(2, 3).edge_count(), 6);
        assert!(Graph::empty(3).has_isolated_vertices());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
    }

    #[test]
    fn isomorphism_check() {
        let p3 = Graph::path(3);
        assert!(p3.is_isomorphism(&p3, &[2, 1, 0]));
        assert!(!p3.is_isomorphism(&p3, &[1, 0, 2]));
        assert!(!p3.is_isomorphism(&p3, &[0, 0, 2]));
    }
}
