//! Checks `min_ecc <= n` on graphs with no stable set of size 3.
//!
//! Such graphs are exactly the complements of triangle-free graphs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_code, triangle_free_graphs, MAX_CANON_N};
use crate::bitset::VertexSet;
use crate::graph::{Edge, Graph};
use crate::oracle::{min_ecc_size, OracleError};

/// Largest order enumerated exhaustively.
pub const EXHAUSTIVE_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepStatus {
    Holds,
    Counterexample,
    /// Oracle budget ran out; neither confirmed nor refuted.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub edge_count: usize,
    /// Canonical code of the graph (isomorphism-class id for `n <= 11`).
    pub code: u64,
    pub exhaustive: bool,
    pub min_ecc: Option<usize>,
    pub status: SweepStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ConjectureRow> {
        self.rows
            .iter()
            .filter(|r| r.status == SweepStatus::Counterexample)
    }

    pub fn skipped(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.status == SweepStatus::Skipped)
            .count()
    }

    /// Graphs on exactly `n` vertices where `min_ecc == n`.
    pub fn tight(&self) -> usize {
        self.rows.iter().filter(|r| r.min_ecc == Some(r.n)).count()
    }
}

/// Random maximal triangle-free graph: add pairs in shuffled order unless
/// they close a triangle.
pub fn random_triangle_free(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut adj = vec![VertexSet::empty(n); n];
    for (u, v) in pairs {
        if adj[u].intersection_len(&adj[v]) == 0 {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Graph::from_adjacency(adj)
}

fn check(g: &Graph, exhaustive: bool, budget: u64) -> ConjectureRow {
    let n = g.n();
    let (min_ecc, status) = match min_ecc_size(g, budget) {
        Ok(k) if k <= n => (Some(k), SweepStatus::Holds),
        Ok(k) => (Some(k), SweepStatus::Counterexample),
        Err(OracleError::BudgetExceeded { .. }) | Err(OracleError::InvalidParameters(_)) => {
            (None, SweepStatus::Skipped)
        }
    };
    ConjectureRow {
        n,
        edge_count: g.edge_count(),
        code: if n <= MAX_CANON_N {
            canonical_code(g)
        } else {
            0
        },
        exhaustive,
        min_ecc,
        status,
    }
}

/// Every isomorphism class for `n <= min(max_n, 7)`; `samples` seeded
/// complements of random maximal triangle-free graphs for each larger `n`.
pub fn conjecture_sweep(max_n: usize, samples: usize, seed: u64, budget: u64) -> ConjectureReport {
    use rayon::prelude::*;
    let mut graphs: Vec<(Graph, bool)> = Vec::new();
    for n in 1..=max_n.min(EXHAUSTIVE_MAX_N) {
        graphs.extend(
            triangle_free_graphs(n)
                .into_iter()
                .map(|g| (g.complement(), true)),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in EXHAUSTIVE_MAX_N + 1..=max_n {
        for _ in 0..samples {
            graphs.push((random_triangle_free(n, &mut rng).complement(), false));
        }
    }
    let rows = graphs
        .par_iter()
        .map(|(g, exhaustive)| check(g, *exhaustive, budget))
        .collect();
    ConjectureReport {
        max_n,
        samples,
        seed,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{independence_number, DEFAULT_BUDGET};

    #[test]
    fn c5_is_tight() {
        let row = check(&Graph::cycle(5), true, DEFAULT_BUDGET);
        assert_eq!(row.min_ecc, Some(5));
        assert_eq!(row.status, SweepStatus::Holds);
    }

    #[test]
    fn sweep_small() {
        let report = conjecture_sweep(5, 0, 0, DEFAULT_BUDGET);
        assert_eq!(report.rows.len(), 1 + 2 + 3 + 7 + 14);
        assert_eq!(report.counterexamples().count(), 0);
        assert_eq!(report.skipped(), 0);
    }

    #[test]
    fn samples_have_alpha_at_most_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let g = random_triangle_free(12, &mut rng).complement();
            assert!(independence_number(&g) <= 2);
        }
    }
}
