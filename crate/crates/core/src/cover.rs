//! Cliques, clique covers, and cover validation.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::{canonical, Edge, Graph, GraphError};

/// A vertex set asserted to be pairwise adjacent in some graph.
///
/// Members are kept sorted and duplicate-free; adjacency is checked by
/// [`validate_cover`] / [`crate::graph::is_clique`], not here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Clique {
    members: Vec<usize>,
}

impl Clique {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    pub fn from_set(set: &VertexSet) -> Self {
        Self {
            members: set.to_vec(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_n(n, self.members.iter().copied().filter(|&v| v < n))
    }
}

impl From<Vec<usize>> for Clique {
    fn from(v: Vec<usize>) -> Self {
        Clique::new(v)
    }
}

impl From<Clique> for Vec<usize> {
    fn from(c: Clique) -> Self {
        c.members
    }
}

/// Which step of which procedure emitted a clique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Pair-deletion baseline.
    Baseline,
    /// Heavy clique from the threshold cover's first phase.
    Phase1,
    /// `K_2` around a light vertex in the threshold cover's second phase.
    Phase2,
    /// Single uncovered edge emitted when neither threshold phase can act.
    Fallback,
    /// `{v} ∪ C` for a greedily extracted clique `C` of a peeled neighbourhood.
    Peel,
    /// `{v, u}` for a neighbour left over after greedy extraction.
    PeelRemainder,
    /// `A_v` from a clique partition.
    Product,
    /// Minimum cover from the exact oracle.
    Exact,
    /// Supplied from outside (e.g. read from a file).
    External,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub cliques: Vec<Clique>,
    pub provenance: Vec<Provenance>,
}

impl CliqueCover {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, clique: Clique, provenance: Provenance) {
        self.cliques.push(clique);
        self.provenance.push(provenance);
    }

    /// Number of cliques.
    pub fn size(&self) -> usize {
        self.cliques.len()
    }

    pub fn from_cliques(cliques: Vec<Clique>, provenance: Provenance) -> Self {
        let provenance = vec![provenance; cliques.len()];
        Self {
            cliques,
            provenance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub valid: bool,
    pub non_clique_indices: Vec<usize>,
    pub uncovered_edges: Vec<Edge>,
    pub size: usize,
}

/// Checks that each entry is a clique of `g` and that together they cover every edge.
///
/// Malformed entries (out-of-range vertices, non-adjacent pairs) are reported
/// by index and contribute no coverage.
pub fn validate_cover(g: &Graph, cover: &CliqueCover) -> CoverReport {
    let n = g.n();
    let mut covered = vec![VertexSet::empty(n); n];
    let mut non_clique_indices = Vec::new();
    for (i, clique) in cover.cliques.iter().enumerate() {
        let in_range = clique.members().iter().all(|&v| v < n);
        let set = clique.to_set(n);
        if !in_range || !crate::graph::is_clique_set(g, &set) {
            non_clique_indices.push(i);
            continue;
        }
        for v in set.iter() {
            covered[v].union_with(&set);
        }
    }
    let mut uncovered_edges = Vec::new();
    for (u, row) in covered.iter().enumerate() {
        let missing = g.neighbors(u).difference(row);
        uncovered_edges.extend(missing.iter().filter(|&v| v > u).map(|v| (u, v)));
    }
    CoverReport {
        valid: non_clique_indices.is_empty() && uncovered_edges.is_empty(),
        non_clique_indices,
        uncovered_edges,
        size: cover.size(),
    }
}

/// The graph on the same vertex set whose edges are `edges(g) \ covered`.
pub fn uncovered_subgraph(g: &Graph, covered: &[Edge]) -> Result<Graph, GraphError> {
    let mut rows: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    for &(a, b) in covered {
        let (u, v) = canonical(a, b);
        if !g.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        rows[u].remove(v);
        rows[v].remove(u);
    }
    Ok(Graph::from_adjacency(rows))
}

/// Mutable record of which edges of a fixed graph are still uncovered.
#[derive(Debug, Clone)]
pub(crate) struct CoverState {
    uncovered: Vec<VertexSet>,
    remaining: usize,
}

impl CoverState {
    pub fn new(g: &Graph) -> Self {
        Self {
            uncovered: (0..g.n()).map(|v| g.neighbors(v).clone()).collect(),
            remaining: g.edge_count(),
        }
    }

    pub fn remaining(&self) -> usize {
        self.remaining
    }

    pub fn uncovered_degree(&self, v: usize) -> usize {
        self.uncovered[v].len()
    }

    pub fn uncovered_neighbors(&self, v: usize) -> &VertexSet {
        &self.uncovered[v]
    }

    /// Uncovered edges with both ends in `set`.
    pub fn newly_covered_by(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|v| self.uncovered[v].intersection_len(set))
            .sum::<usize>()
            / 2
    }

    /// Marks every pair inside `set` covered; returns how many were newly covered.
    pub fn cover(&mut self, set: &VertexSet) -> usize {
        let gained = self.newly_covered_by(set);
        for v in set.iter() {
            self.uncovered[v].difference_with(set);
        }
        self.remaining -= gained;
        gained
    }

    /// Smallest uncovered edge in canonical order.
    pub fn first_uncovered_edge(&self) -> Option<Edge> {
        self.uncovered
            .iter()
            .enumerate()
            .find_map(|(u, row)| row.iter().find(|&v| v > u).map(|v| (u, v)))
    }

    /// Snapshot of the uncovered edges as a graph (the `H` of the threshold argument).
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.uncovered.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn c4() -> Graph {
        build_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn triangle() -> Graph {
        build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn cover_of(cliques: &[&[usize]]) -> CliqueCover {
        CliqueCover::from_cliques(
            cliques.iter().map(|c| Clique::new(c.to_vec())).collect(),
            Provenance::External,
        )
    }

    #[test]
    fn triangle_single_clique_valid() {
        let r = validate_cover(&triangle(), &cover_of(&[&[0, 1, 2]]));
        assert!(r.valid);
        assert_eq!(r.size, 1);
    }

    #[test]
    fn c4_missing_edge() {
        let r = validate_cover(&c4(), &cover_of(&[&[0, 1], &[1, 2], &[2, 3]]));
        assert!(!r.valid);
        assert_eq!(r.uncovered_edges, vec![(0, 3)]);
        assert!(r.non_clique_indices.is_empty());
    }

    #[test]
    fn c4_non_clique() {
        let r = validate_cover(&c4(), &cover_of(&[&[0, 2]]));
        assert!(!r.valid);
        assert_eq!(r.non_clique_indices, vec![0]);
        assert_eq!(r.uncovered_edges.len(), 4);
    }

    #[test]
    fn out_of_range_reported_not_rejected() {
        let r = validate_cover(&c4(), &cover_of(&[&[0, 9]]));
        assert_eq!(r.non_clique_indices, vec![0]);
    }

    #[test]
    fn uncovered_subgraph_cases() {
        let g = c4();
        assert_eq!(uncovered_subgraph(&g, &g.edges()).unwrap().edge_count(), 0);
        assert_eq!(uncovered_subgraph(&g, &[]).unwrap(), g);
        let h = uncovered_subgraph(&triangle(), &[(1, 0)]).unwrap();
        assert_eq!(h.edges(), vec![(0, 2), (1, 2)]);
        assert_eq!(
            uncovered_subgraph(&g, &[(0, 2)]),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn clique_serializes_as_array() {
        let c = Clique::new(vec![3, 1, 3]);
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1,3]");
    }

    #[test]
    fn state_counts_new_coverage() {
        let g = Graph::complete(4);
        let mut st = CoverState::new(&g);
        assert_eq!(st.cover(&VertexSet::from_iter_n(4, [0, 1, 2])), 3);
        assert_eq!(st.cover(&VertexSet::from_iter_n(4, [0, 1, 3])), 2);
        assert_eq!(st.remaining(), 1);
        assert_eq!(st.first_uncovered_edge(), Some((2, 3)));
    }
}
