//! Clique partitions of graphs with small independence number, and the
//! product cover built from them.

use serde::{Deserialize, Serialize};

use super::params::CoverParams;
use super::AlgoError;
use crate::bitset::VertexSet;
use crate::cover::{Clique, CliqueCover, CoverState, Provenance};
use crate::graph::{is_clique_set, Graph};
use crate::oracle::max_clique_within;

/// Pairwise disjoint cliques whose union is the whole vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartition {
    pub parts: Vec<Clique>,
}

impl CliquePartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Checks disjointness, exhaustiveness and that each part is a clique of `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), AlgoError> {
        let n = g.n();
        let mut seen = VertexSet::empty(n);
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(AlgoError::MalformedPartition(format!("part {i} is empty")));
            }
            if let Some(&v) = part.members().iter().find(|&&v| v >= n) {
                return Err(AlgoError::MalformedPartition(format!(
                    "part {i} has vertex {v} outside 0..{n}"
                )));
            }
            let set = part.to_set(n);
            if set.intersection_len(&seen) > 0 {
                return Err(AlgoError::MalformedPartition(format!(
                    "part {i} overlaps an earlier part"
                )));
            }
            if !is_clique_set(g, &set) {
                return Err(AlgoError::MalformedPartition(format!(
                    "part {i} is not a clique"
                )));
            }
            seen.union_with(&set);
        }
        if seen.len() != n {
            return Err(AlgoError::MalformedPartition(format!(
                "parts cover {} of {n} vertices",
                seen.len()
            )));
        }
        Ok(())
    }
}

/// `f · w^{1/(s-1)} · (log₂ w)^{(s-2)/(s-1)}`.
pub fn partition_threshold(w: usize, s: usize, factor: f64) -> f64 {
    let w = w as f64;
    let k = (s - 1) as f64;
    factor * w.powf(1.0 / k) * w.log2().max(0.0).powf((s - 2) as f64 / k)
}

/// Partitions `V(g)` into cliques by repeated maximum-clique extraction.
///
/// At each level on a vertex set `W` of size `w >= 2`, maximum cliques of
/// `g[W]` are removed while they have at least
/// [`partition_threshold`]`(w)` vertices; the level then recurses on what is
/// left. A level that extracts nothing ends the recursion with singletons,
/// as in the small-graph base case of the construction.
pub fn clique_partition(
    g: &Graph,
    s: usize,
    p: &CoverParams,
) -> Result<CliquePartition, AlgoError> {
    if s < 3 {
        return Err(AlgoError::InvalidParameter(format!(
            "clique_partition needs s >= 3, got {s}"
        )));
    }
    let mut rest = g.vertices();
    let mut parts = Vec::new();
    loop {
        let w = rest.len();
        if w <= 1 {
            parts.extend(rest.iter().map(|v| Clique::new(vec![v])));
            break;
        }
        let threshold = partition_threshold(w, s, p.partition_factor);
        let mut extracted = false;
        while !rest.is_empty() {
            let clique = max_clique_within(g, &rest);
            if (clique.len() as f64) < threshold {
                break;
            }
            for &v in &clique {
                rest.remove(v);
            }
            parts.push(Clique::new(clique));
            extracted = true;
        }
        if !extracted {
            parts.extend(rest.iter().map(|v| Clique::new(vec![v])));
            break;
        }
    }
    Ok(CliquePartition { parts })
}

/// The cover `{A_v}` with `A_v = {v} ∪ (N(v) ∩ A)` for every vertex `v` and part `A`.
///
/// Cliques with fewer than two vertices are dropped. With `dedupe`, cliques
/// are scanned with `v` ascending and parts in order, and any clique adding
/// no uncovered edge (including repeats) is skipped.
pub fn partition_product_cover(
    g: &Graph,
    parts: &CliquePartition,
    dedupe: bool,
) -> Result<CliqueCover, AlgoError> {
    parts.validate(g)?;
    let n = g.n();
    let part_sets: Vec<VertexSet> = parts.parts.iter().map(|a| a.to_set(n)).collect();
    let mut state = CoverState::new(g);
    let mut cover = CliqueCover::new();
    for v in 0..n {
        for a in &part_sets {
            let mut set = g.neighbors(v).intersection(a);
            set.insert(v);
            if set.len() < 2 {
                continue;
            }
            let gained = state.cover(&set);
            if dedupe && gained == 0 {
                continue;
            }
            cover.push(Clique::from_set(&set), Provenance::Product);
        }
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;

    fn parts(p: &[&[usize]]) -> CliquePartition {
        CliquePartition {
            parts: p.iter().map(|c| Clique::new(c.to_vec())).collect(),
        }
    }

    #[test]
    fn complete_graph_one_part() {
        for n in 1..9 {
            let g = Graph::complete(n);
            let part = clique_partition(&g, 3, &CoverParams::faithful(3, 0)).unwrap();
            assert_eq!(part.len(), 1);
            let c = partition_product_cover(&g, &part, true).unwrap();
            assert_eq!(c.size(), usize::from(n >= 2));
        }
    }

    #[test]
    fn edgeless_singletons() {
        let g = Graph::edgeless(6);
        let part = clique_partition(&g, 3, &CoverParams::faithful(3, 0)).unwrap();
        assert_eq!(part.len(), 6);
        assert_eq!(partition_product_cover(&g, &part, true).unwrap().size(), 0);
    }

    #[test]
    fn c5_practical_greedy() {
        let g = Graph::cycle(5);
        let part = clique_partition(&g, 3, &CoverParams::practical(3, 0)).unwrap();
        assert_eq!(part, parts(&[&[0, 1], &[2, 3], &[4]]));
        part.validate(&g).unwrap();
    }

    #[test]
    fn c5_faithful_threshold_falls_back_to_singletons() {
        // 5^{1/2}·(log₂5)^{1/2} ≈ 3.41 > ω(C5) = 2
        let g = Graph::cycle(5);
        let part = clique_partition(&g, 3, &CoverParams::faithful(3, 0)).unwrap();
        assert_eq!(part.len(), 5);
    }

    #[test]
    fn c4_product_hand_enumeration() {
        let g = Graph::cycle(4);
        let c = partition_product_cover(&g, &parts(&[&[0, 1], &[2, 3]]), true).unwrap();
        let got: Vec<&[usize]> = c.cliques.iter().map(|k| k.members()).collect();
        assert_eq!(got, vec![&[0, 1][..], &[0, 3], &[1, 2], &[2, 3]]);
        assert!(validate_cover(&g, &c).valid);
        let raw = partition_product_cover(&g, &parts(&[&[0, 1], &[2, 3]]), false).unwrap();
        assert_eq!(raw.size(), 8);
    }

    #[test]
    fn malformed_partitions_rejected() {
        let g = Graph::cycle(4);
        assert!(partition_product_cover(&g, &parts(&[&[0, 1]]), true).is_err());
        assert!(partition_product_cover(&g, &parts(&[&[0, 2], &[1, 3]]), true).is_err());
        assert!(partition_product_cover(&g, &parts(&[&[0, 1], &[1, 2], &[3]]), true).is_err());
        assert!(partition_product_cover(&g, &parts(&[&[0, 1], &[2, 3], &[7]]), true).is_err());
    }

    #[test]
    fn rejects_small_s() {
        assert!(clique_partition(&Graph::cycle(4), 2, &CoverParams::faithful(2, 0)).is_err());
    }
}
