//! Certified small graphs with no stable `s`-set and bounded clique number,
//! found by seeded edge-toggle local search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::clique::{clique_number, independence_number};
use crate::bitset::VertexSet;
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RamseyWitness {
    pub graph: Graph,
    /// Every stable set has fewer than `s` vertices.
    pub s: usize,
    /// Exact clique number of `graph`.
    pub omega: usize,
    pub seed: u64,
    pub iterations_used: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamseyError {
    #[error("no witness with alpha < {s} and omega <= {max_omega} on {n} vertices after {iterations} iterations")]
    NotFound {
        n: usize,
        s: usize,
        max_omega: usize,
        iterations: u64,
    },
    #[error("graph has alpha = {alpha}, which is not below s = {s}")]
    StableTooLarge { alpha: usize, s: usize },
    #[error("recorded omega {recorded} differs from the exact clique number {actual}")]
    OmegaMismatch { recorded: usize, actual: usize },
}

impl RamseyWitness {
    /// Wraps `graph` after checking `alpha(graph) < s`; `omega` is computed exactly.
    pub fn certify(
        graph: Graph,
        s: usize,
        seed: u64,
        iterations_used: u64,
    ) -> Result<Self, RamseyError> {
        let alpha = independence_number(&graph);
        if alpha >= s {
            return Err(RamseyError::StableTooLarge { alpha, s });
        }
        let omega = clique_number(&graph);
        Ok(Self {
            graph,
            s,
            omega,
            seed,
            iterations_used,
        })
    }

    /// Re-runs both exact checks.
    pub fn verify(&self) -> Result<(), RamseyError> {
        let alpha = independence_number(&self.graph);
        if alpha >= self.s {
            return Err(RamseyError::StableTooLarge { alpha, s: self.s });
        }
        let actual = clique_number(&self.graph);
        if actual != self.omega {
            return Err(RamseyError::OmegaMismatch {
                recorded: self.omega,
                actual,
            });
        }
        Ok(())
    }
}

/// Number of `r`-cliques inside `cand`.
fn count_cliques(adj: &[VertexSet], cand: &VertexSet, r: usize) -> u64 {
    if r == 0 {
        return 1;
    }
    if cand.len() < r {
        return 0;
    }
    if r == 1 {
        return cand.len() as u64;
    }
    let mut total = 0;
    for v in cand.iter() {
        let mut next = cand.intersection(&adj[v]);
        for u in next.clone().iter().take_while(|&u| u < v) {
            next.remove(u);
        }
        total += count_cliques(adj, &next, r - 1);
    }
    total
}

fn ln_binom(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    (0..k)
        .map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln())
        .sum()
}

/// Edge density equalising the expected number of stable `s`-sets and `k`-cliques in G(n, p).
fn balanced_density(n: usize, s: usize, k: usize) -> f64 {
    let (ls, lk) = (ln_binom(n, s), ln_binom(n, k));
    if ls.is_infinite() && lk.is_infinite() {
        return 0.5;
    }
    if ls.is_infinite() {
        return 1.0 - 1.0 / (k as f64);
    }
    if lk.is_infinite() {
        return 1.0 / (s as f64);
    }
    let (ps, pk) = ((s * (s - 1) / 2) as f64, (k * (k - 1) / 2) as f64);
    // stable excess minus clique excess, decreasing in p
    let f = |p: f64| ls + ps * (1.0 - p).ln() - lk - pk * p.ln();
    let (mut lo, mut hi) = (1e-6, 1.0 - 1e-6);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

struct LocalSearch {
    n: usize,
    adj: Vec<VertexSet>,
    co_adj: Vec<VertexSet>,
    s: usize,
    k: usize,
}

impl LocalSearch {
    fn objective(&self) -> u64 {
        let all = VertexSet::full(self.n);
        count_cliques(&self.co_adj, &all, self.s) + count_cliques(&self.adj, &all, self.k)
    }

    /// Objective change from toggling `(u, v)`.
    fn delta(&self, u: usize, v: usize) -> i64 {
        let mut common = self.adj[u].intersection(&self.adj[v]);
        common.remove(u);
        common.remove(v);
        let mut common_non = self.co_adj[u].intersection(&self.co_adj[v]);
        common_non.remove(u);
        common_non.remove(v);
        let cliques = count_cliques(&self.adj, &common, self.k - 2) as i64;
        let stables = count_cliques(&self.co_adj, &common_non, self.s - 2) as i64;
        if self.adj[u].contains(v) {
            stables - cliques
        } else {
            cliques - stables
        }
    }

    fn toggle(&mut self, u: usize, v: usize) {
        if self.adj[u].contains(v) {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
            self.co_adj[u].insert(v);
            self.co_adj[v].insert(u);
        } else {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.co_adj[u].remove(v);
            self.co_adj[v].remove(u);
        }
    }
}

/// Seeded search for a graph on `n` vertices with `alpha < s` and `omega <= max_omega`.
///
/// Starts from G(n, p) at the density balancing expected stable `s`-sets
/// against `(max_omega + 1)`-cliques, then repeatedly applies the edge toggle
/// that most reduces their total count (canonical edge order on ties).
/// Zero-change moves are taken under a short tabu list up to a sideways
/// budget; when stuck, a random toggle perturbs the state. Success is
/// re-certified with the exact oracles. Failure after `max_iters` moves is an
/// ordinary outcome.
pub fn ramsey_search(
    n: usize,
    s: usize,
    max_omega: usize,
    seed: u64,
    max_iters: u64,
) -> Result<RamseyWitness, RamseyError> {
    let not_found = |iterations| RamseyError::NotFound {
        n,
        s,
        max_omega,
        iterations,
    };
    // alpha < s and omega <= max_omega are unsatisfiable for n >= 1 when either bound is < 1
    if n == 0 || s < 2 || max_omega < 1 {
        return Err(not_found(0));
    }
    let k = max_omega + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = balanced_density(n, s, k);
    let mut state = LocalSearch {
        n,
        adj: vec![VertexSet::empty(n); n],
        co_adj: vec![VertexSet::empty(n); n],
        s,
        k,
    };
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                state.adj[u].insert(v);
                state.adj[v].insert(u);
            } else {
                state.co_adj[u].insert(v);
                state.co_adj[v].insert(u);
            }
        }
    }
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let tenure = (n / 2).max(1);
    let sideways_limit = 2 * n as u64;
    let mut tabu: Vec<Edge> = Vec::new();
    let mut sideways = 0u64;
    let mut objective = state.objective();
    let mut iterations = 0u64;
    while objective > 0 {
        if iterations >= max_iters || pairs.is_empty() {
            return Err(not_found(iterations));
        }
        iterations += 1;
        let best = pairs
            .iter()
            .filter(|e| !tabu.contains(e))
            .map(|&(u, v)| (state.delta(u, v), (u, v)))
            .min_by_key(|&(d, e)| (d, e));
        let mv = match best {
            Some((d, e)) if d < 0 => {
                sideways = 0;
                Some(e)
            }
            Some((0, e)) if sideways < sideways_limit => {
                sideways += 1;
                Some(e)
            }
            _ => None,
        };
        let (u, v) = mv.unwrap_or_else(|| {
            sideways = 0;
            pairs[rng.gen_range(0..pairs.len())]
        });
        objective = (objective as i64 + state.delta(u, v)) as u64;
        state.toggle(u, v);
        tabu.push((u, v));
        if tabu.len() > tenure {
            tabu.remove(0);
        }
    }
    let graph = Graph::from_adjacency(state.adj);
    let witness = RamseyWitness::certify(graph, s, seed, iterations)?;
    if witness.omega > max_omega {
        // objective 0 already excludes this; kept as a certification failure
        return Err(not_found(iterations));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_counts() {
        let k5 = Graph::complete(5);
        let adj: Vec<VertexSet> = (0..5).map(|v| k5.neighbors(v).clone()).collect();
        let all = VertexSet::full(5);
        assert_eq!(count_cliques(&adj, &all, 3), 10);
        assert_eq!(count_cliques(&adj, &all, 5), 1);
        assert_eq!(count_cliques(&adj, &all, 0), 1);
    }

    #[test]
    fn density_is_symmetric_for_diagonal_case() {
        assert!((balanced_density(10, 4, 4) - 0.5).abs() < 1e-9);
        // stable triples are far more likely than 4-cliques at p = 1/2
        let p = balanced_density(10, 3, 4);
        assert!(p > 0.5, "got {p}");
    }

    #[test]
    fn c5_certifies() {
        let w = RamseyWitness::certify(Graph::cycle(5), 3, 0, 0).unwrap();
        assert_eq!(w.omega, 2);
        assert!(w.verify().is_ok());
        assert!(RamseyWitness::certify(Graph::cycle(4), 2, 0, 0).is_err());
    }

    #[test]
    fn unsatisfiable_bounds_fail_fast() {
        assert!(ramsey_search(4, 1, 3, 0, 100).is_err());
        assert!(ramsey_search(4, 3, 0, 0, 100).is_err());
    }
}
