//! Minimum edge clique cover by set-cover branch and bound.
//!
//! Every clique extends to a maximal clique covering a superset of its
//! edges, so an optimum over maximal cliques is an optimum overall.

use super::clique::maximal_cliques;
use super::OracleError;
use crate::bitset::VertexSet;
use crate::cover::{Clique, CliqueCover, Provenance};
use crate::graph::Graph;

/// Default search-node limit used by the CLI and harness.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

struct Instance {
    /// edge-index sets covered by each maximal clique (size >= 2)
    clique_edges: Vec<VertexSet>,
    cliques: Vec<Vec<usize>>,
    /// cliques covering each edge
    covering: Vec<Vec<usize>>,
    m: usize,
}

impl Instance {
    fn new(g: &Graph) -> Self {
        let edges = g.edges();
        let m = edges.len();
        let mut index = vec![Vec::new(); g.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u].push((v, i));
        }
        let cliques: Vec<Vec<usize>> = maximal_cliques(g)
            .into_iter()
            .filter(|c| c.len() >= 2)
            .collect();
        let mut covering = vec![Vec::new(); m];
        let clique_edges = cliques
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                let mut set = VertexSet::empty(m);
                for (a, &u) in c.iter().enumerate() {
                    for &v in &c[a + 1..] {
                        let e = index[u]
                            .iter()
                            .find(|&&(w, _)| w == v)
                            .map(|&(_, e)| e)
                            .expect("clique pair is an edge");
                        set.insert(e);
                        covering[e].push(ci);
                    }
                }
                set
            })
            .collect();
        Self {
            clique_edges,
            cliques,
            covering,
            m,
        }
    }

    /// Greedy packing of uncovered edges no two of which share a maximal clique.
    fn packing_bound(&self, uncovered: &VertexSet) -> usize {
        let mut order: Vec<usize> = uncovered.iter().collect();
        order.sort_by_key(|&e| (self.covering[e].len(), e));
        let mut blocked = VertexSet::empty(self.m);
        let mut count = 0;
        for e in order {
            if blocked.contains(e) {
                continue;
            }
            count += 1;
            for &c in &self.covering[e] {
                blocked.union_with(&self.clique_edges[c]);
            }
        }
        count
    }

    fn lower_bound(&self, uncovered: &VertexSet) -> usize {
        let remaining = uncovered.len();
        if remaining == 0 {
            return 0;
        }
        let widest = self
            .clique_edges
            .iter()
            .map(|c| c.intersection_len(uncovered))
            .max()
            .unwrap_or(1)
            .max(1);
        self.packing_bound(uncovered)
            .max(remaining.div_ceil(widest))
    }

    fn greedy(&self) -> Vec<usize> {
        let mut uncovered = VertexSet::full(self.m);
        let mut chosen = Vec::new();
        while !uncovered.is_empty() {
            let best = (0..self.cliques.len())
                .max_by_key(|&c| {
                    (
                        self.clique_edges[c].intersection_len(&uncovered),
                        std::cmp::Reverse(c),
                    )
                })
                .expect("uncovered edges imply cliques");
            uncovered.difference_with(&self.clique_edges[best]);
            chosen.push(best);
        }
        chosen
    }
}

struct Search<'a> {
    inst: &'a Instance,
    best: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, uncovered: VertexSet) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExceeded {
                budget: self.budget,
            });
        }
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + self.inst.lower_bound(&uncovered) >= self.best.len() {
            return Ok(());
        }
        // most constrained uncovered edge, lowest index on ties
        let edge = uncovered
            .iter()
            .min_by_key(|&e| (self.inst.covering[e].len(), e))
            .expect("non-empty");
        let mut branches: Vec<(usize, usize)> = self.inst.covering[edge]
            .iter()
            .map(|&c| (self.inst.clique_edges[c].intersection_len(&uncovered), c))
            .collect();
        branches.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in branches {
            self.chosen.push(c);
            self.run(uncovered.difference(&self.inst.clique_edges[c]))?;
            self.chosen.pop();
        }
        Ok(())
    }
}

/// A provably minimum clique cover of `g`, or [`OracleError::BudgetExceeded`]
/// after `budget` search nodes. Never returns a non-optimal cover.
pub fn min_ecc_exact(g: &Graph, budget: u64) -> Result<CliqueCover, OracleError> {
    let inst = Instance::new(g);
    let greedy = inst.greedy();
    let mut search = Search {
        inst: &inst,
        best: greedy,
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    search.run(VertexSet::full(inst.m))?;
    let mut picked = search.best;
    picked.sort_unstable();
    Ok(CliqueCover::from_cliques(
        picked
            .into_iter()
            .map(|c| Clique::new(inst.cliques[c].clone()))
            .collect(),
        Provenance::Exact,
    ))
}

/// Size of a minimum clique cover, see [`min_ecc_exact`].
pub fn min_ecc_size(g: &Graph, budget: u64) -> Result<usize, OracleError> {
    min_ecc_exact(g, budget).map(|c| c.size())
}
