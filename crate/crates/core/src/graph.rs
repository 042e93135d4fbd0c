//! Immutable simple undirected graphs over dense vertex ids `0..n`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bitset::VertexSet;

/// A vertex pair in canonical `(min, max)` order.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("self-loop ({0}, {0})")]
    SelfLoop(usize),
    #[error("vertex {0} outside 0..{1}")]
    VertexOutOfRange(usize, usize),
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
}

#[inline]
pub fn canonical(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph with bitset adjacency.
///
/// Symmetric and irreflexive by construction; there is no mutating API.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

/// Builds a graph from an edge list, dropping duplicate pairs in either orientation.
pub fn build_graph(n: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
    let mut adj = vec![VertexSet::empty(n); n];
    let mut edge_count = 0;
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(GraphError::OutOfRange(u, v, n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !adj[u].contains(v) {
            adj[u].insert(v);
            adj[v].insert(u);
            edge_count += 1;
        }
    }
    Ok(Graph { n, adj, edge_count })
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::empty(n); n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| {
                let mut s = VertexSet::full(n);
                s.remove(v);
                s
            })
            .collect();
        Self {
            n,
            adj,
            edge_count: n * n.saturating_sub(1) / 2,
        }
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<Edge> = (0..n).map(|i| canonical(i, (i + 1) % n)).collect();
        build_graph(n, &edges).expect("cycle edges are in range")
    }

    /// Builds from adjacency rows already known to be symmetric and irreflexive.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        debug_assert!((0..n).all(|v| !adj[v].contains(v)));
        debug_assert!((0..n).all(|u| adj[u].iter().all(|v| adj[v].contains(u))));
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Self { n, adj, edge_count }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut s = full.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![VertexSet::empty(k); k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|v| self.adj[v].intersection_len(set))
            .sum::<usize>()
            / 2
    }

    /// SHA-256 of the canonical edge-list text, hex encoded.
    pub fn content_hash(&self) -> String {
        let text = crate::edgelist::to_edge_list(self);
        Sha256::digest(text.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.n))
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// True iff every pair of `vs` is adjacent. Sets of size at most one are cliques.
pub fn is_clique(g: &Graph, vs: &[usize]) -> Result<bool, GraphError> {
    for &v in vs {
        g.check_vertex(v)?;
    }
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if !g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bitset form of [`is_clique`] for callers that already hold a set.
pub fn is_clique_set(g: &Graph, vs: &VertexSet) -> bool {
    vs.iter().all(|v| {
        let mut rest = vs.clone();
        rest.remove(v);
        rest.is_subset(g.neighbors(v))
    })
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<Edge>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        build_graph(repr.n, &repr.edges).map_err(serde::de::Error::custom)
    }
}
