//! Induced complete bipartite subgraph detection.

use serde::{Deserialize, Serialize};

use super::clique::{max_clique_within, max_stable_exact};
use super::OracleError;
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Disjoint stable sets `a` (|a| = s) and `b` (|b| = t), complete to each other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KstWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl KstWitness {
    /// Re-checks the witness against `g`.
    pub fn holds(&self, g: &Graph, s: usize, t: usize) -> bool {
        let stable = |vs: &[usize]| {
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        };
        let distinct = {
            let mut all: Vec<usize> = self.a.iter().chain(&self.b).copied().collect();
            all.sort_unstable();
            all.dedup();
            all.len() == s + t
        };
        self.a.len() == s
            && self.b.len() == t
            && self.a.iter().chain(&self.b).all(|&v| v < g.n())
            && distinct
            && stable(&self.a)
            && stable(&self.b)
            && self
                .a
                .iter()
                .all(|&u| self.b.iter().all(|&v| g.has_edge(u, v)))
    }
}

/// Searches for an induced `K_{s,t}`; `s + t` must be positive.
///
/// With one side empty this is a stable-set question answered by the exact
/// independence oracle. Otherwise every stable set on the smaller side is
/// enumerated in lexicographic order and its common neighbourhood is
/// searched for a stable set of the other size.
pub fn contains_induced_kst(
    g: &Graph,
    s: usize,
    t: usize,
) -> Result<Option<KstWitness>, OracleError> {
    if s + t == 0 {
        return Err(OracleError::InvalidParameters(
            "K_{0,0} is not a graph; need s + t >= 1".into(),
        ));
    }
    if s == 0 || t == 0 {
        let need = s.max(t);
        let stable = max_stable_exact(g);
        if stable.len() < need {
            return Ok(None);
        }
        let side = stable[..need].to_vec();
        return Ok(Some(if s == 0 {
            KstWitness { a: vec![], b: side }
        } else {
            KstWitness { a: side, b: vec![] }
        }));
    }
    let (small, large) = if t <= s { (t, s) } else { (s, t) };
    let complement = g.complement();
    let mut chosen = Vec::with_capacity(small);
    let found = enumerate_stable(
        g,
        &complement,
        small,
        large,
        VertexSet::full(g.n()),
        VertexSet::full(g.n()),
        &mut chosen,
    );
    Ok(found.map(|(small_side, large_side)| {
        if t <= s {
            KstWitness {
                a: large_side,
                b: small_side,
            }
        } else {
            KstWitness {
                a: small_side,
                b: large_side,
            }
        }
    }))
}

/// Extends `chosen` to a stable set of size `small` drawn from `cand`; at the
/// leaves looks for a stable `large`-set inside the common neighbourhood.
fn enumerate_stable(
    g: &Graph,
    complement: &Graph,
    small: usize,
    large: usize,
    cand: VertexSet,
    common: VertexSet,
    chosen: &mut Vec<usize>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    if common.len() < large {
        return None;
    }
    if chosen.len() == small {
        let stable = max_clique_within(complement, &common);
        return (stable.len() >= large).then(|| (chosen.clone(), stable[..large].to_vec()));
    }
    for v in cand.iter() {
        let mut next = cand.intersection(complement.neighbors(v));
        for u in next.clone().iter().take_while(|&u| u < v) {
            next.remove(u);
        }
        if next.len() + chosen.len() + 1 < small {
            continue;
        }
        chosen.push(v);
        let found = enumerate_stable(
            g,
            complement,
            small,
            large,
            next,
            common.intersection(g.neighbors(v)),
            chosen,
        );
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
