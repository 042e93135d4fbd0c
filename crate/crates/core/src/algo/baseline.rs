use crate::bitset::VertexSet;
use crate::cover::{Clique, CliqueCover, Provenance};
use crate::graph::Graph;

/// Pair-deletion cover of size at most `⌊n²/4⌋`.
///
/// Takes the smallest remaining edge `xy`, covers everything at `x` or `y`
/// with at most `n - 1` cliques (`{x,y,z}` per common neighbour, `{x,z}` or
/// `{y,z}` per private neighbour, `{x,y}` if there is no common neighbour),
/// deletes both ends and repeats.
pub fn quadratic_baseline_cover(g: &Graph) -> CliqueCover {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut cover = CliqueCover::new();
    loop {
        let edge = alive.iter().find_map(|x| {
            g.neighbors(x)
                .intersection(&alive)
                .iter()
                .find(|&y| y > x)
                .map(|y| (x, y))
        });
        let Some((x, y)) = edge else { break };
        let nx = g.neighbors(x).intersection(&alive);
        let ny = g.neighbors(y).intersection(&alive);
        let common = nx.intersection(&ny);
        if common.is_empty() {
            cover.push(Clique::new(vec![x, y]), Provenance::Baseline);
        }
        for z in common.iter() {
            cover.push(Clique::new(vec![x, y, z]), Provenance::Baseline);
        }
        for z in nx.difference(&ny).iter().filter(|&z| z != y) {
            cover.push(Clique::new(vec![x, z]), Provenance::Baseline);
        }
        for z in ny.difference(&nx).iter().filter(|&z| z != x) {
            cover.push(Clique::new(vec![y, z]), Provenance::Baseline);
        }
        alive.remove(x);
        alive.remove(y);
    }
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_cover;

    #[test]
    fn triangle_is_one_clique() {
        let c = quadratic_baseline_cover(&Graph::complete(3));
        assert_eq!(c.cliques, vec![Clique::new(vec![0, 1, 2])]);
    }

    #[test]
    fn c4_hand_trace() {
        // edge 01: no common neighbour -> {0,1}; private {0,3}, {1,2}; then {2,3}
        let g = Graph::cycle(4);
        let c = quadratic_baseline_cover(&g);
        let got: Vec<Vec<usize>> = c.cliques.iter().map(|k| k.members().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert!(validate_cover(&g, &c).valid);
    }

    #[test]
    fn edgeless_is_empty() {
        assert_eq!(quadratic_baseline_cover(&Graph::edgeless(6)).size(), 0);
    }
}
