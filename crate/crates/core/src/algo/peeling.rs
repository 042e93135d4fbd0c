//! Minimum-degree peeling cover for `K_{2,2}`- and `K_{2,3}`-free graphs.

use serde::{Deserialize, Serialize};

use super::params::CoverParams;
use super::trace::{CoverTrace, TraceStep};
use crate::bitset::VertexSet;
use crate::cover::{Clique, CliqueCover, CoverState, Provenance};
use crate::graph::Graph;
use crate::oracle::max_clique_within;

/// Which excluded subgraph the size guarantee refers to. The procedure is
/// the same for both; the variant selects the bound it is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PeelVariant {
    K22,
    K23,
}

/// Dyadic range index of `|M|` relative to `√n'`, absent below `4√n'`.
fn m_range(m: usize, n_cur: usize) -> Option<u32> {
    let root = (n_cur as f64).sqrt();
    let ratio = m as f64 / root;
    (ratio >= 4.0).then(|| ratio.log2().floor() as u32)
}

/// Peels a vertex of minimum positive uncovered degree at a time.
///
/// For the peeled vertex `v` with uncovered neighbourhood `D` in the current
/// graph on `n'` vertices, maximum cliques `C` of the not yet used part of
/// `D` are extracted (exact search, lexicographic tie-break) while more than
/// `remainder_factor·√n'` vertices are left, each emitted as `{v} ∪ C`; the
/// rest of `D` is covered by `K_2`s at `v`. Then `v` is deleted. The
/// variant does not change the procedure.
pub fn mindeg_peeling_cover(
    g: &Graph,
    _variant: PeelVariant,
    p: &CoverParams,
) -> (CliqueCover, CoverTrace) {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut state = CoverState::new(g);
    let mut cover = CliqueCover::new();
    let mut trace = CoverTrace::new(true);

    while let Some(v) = alive
        .iter()
        .filter(|&v| state.uncovered_degree(v) > 0)
        .min_by_key(|&v| (state.uncovered_degree(v), v))
    {
        let n_cur = alive.len();
        let degree = state.uncovered_degree(v);
        let limit = p.remainder_factor * (n_cur as f64).sqrt();
        let mut rest = state.uncovered_neighbors(v).intersection(&alive);

        while !rest.is_empty() && rest.len() as f64 > limit {
            let part = max_clique_within(g, &rest);
            let range = m_range(rest.len(), n_cur);
            let mut set = VertexSet::from_iter_n(n, part.iter().copied());
            for &u in &part {
                rest.remove(u);
            }
            set.insert(v);
            let gained = state.cover(&set);
            let clique = Clique::from_set(&set);
            trace.steps.push(TraceStep {
                phase: Provenance::Peel,
                clique: clique.clone(),
                newly_covered: gained,
                trigger_vertex: Some(v),
                trigger_degree: Some(degree),
                m_range: range,
            });
            cover.push(clique, Provenance::Peel);
        }
        for u in rest.to_vec() {
            let set = VertexSet::from_iter_n(n, [v, u]);
            let gained = state.cover(&set);
            let clique = Clique::new(vec![v, u]);
            trace.steps.push(TraceStep {
                phase: Provenance::PeelRemainder,
                clique: clique.clone(),
                newly_covered: gained,
                trigger_vertex: Some(v),
                trigger_degree: Some(degree),
                m_range: None,
            });
            cover.push(clique, Provenance::PeelRemainder);
        }
        alive.remove(v);
    }
    (cover, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;
    use crate::generators::star;

    #[test]
    fn c4_faithful_mode_all_edges() {
        let g = Graph::cycle(4);
        let (c, t) = mindeg_peeling_cover(&g, PeelVariant::K22, &CoverParams::faithful(2, 2));
        assert_eq!(c.size(), 4);
        assert!(c.cliques.iter().all(|k| k.len() == 2));
        assert_eq!(t.count(Provenance::PeelRemainder), 4);
        assert!(validate_cover(&g, &c).valid);
    }

    #[test]
    fn k4_practical_single_clique() {
        let g = Graph::complete(4);
        let (c, _) = mindeg_peeling_cover(&g, PeelVariant::K22, &CoverParams::practical(2, 2));
        assert_eq!(c.cliques, vec![Clique::new(vec![0, 1, 2, 3])]);
    }

    #[test]
    fn star_is_all_edges() {
        let g = star(5);
        for p in [CoverParams::faithful(2, 2), CoverParams::practical(2, 3)] {
            for variant in [PeelVariant::K22, PeelVariant::K23] {
                let (c, _) = mindeg_peeling_cover(&g, variant, &p);
                assert_eq!(c.size(), 5);
            }
        }
    }

    #[test]
    fn range_index() {
        assert_eq!(m_range(3, 4), None);
        assert_eq!(m_range(8, 4), Some(2));
        assert_eq!(m_range(15, 4), Some(2));
        assert_eq!(m_range(16, 4), Some(3));
    }
}
