//! Exact clique searches on bitset graphs.
//!
//! Both branch-and-bound searches walk cliques as ascending vertex
//! sequences in lexicographic (prefix-first) order and only accept strict
//! improvements, so the returned optimum is the lexicographically smallest
//! one. Callers rely on that for reproducible covers.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Greedy sequential colouring of `cand` in descending vertex order.
///
/// Returns `bound[v]` for `v` in `cand`: the number of colours used on
/// `{u in cand : u >= v}`, an upper bound on any clique inside that suffix.
fn suffix_colour_bounds(g: &Graph, cand: &VertexSet, out: &mut Vec<(usize, usize)>) {
    out.clear();
    let mut classes: Vec<VertexSet> = Vec::new();
    let members = cand.to_vec();
    let mut running = 0;
    for &v in members.iter().rev() {
        let nbrs = g.neighbors(v);
        let slot = classes
            .iter()
            .position(|c| c.intersection_len(nbrs) == 0)
            .unwrap_or_else(|| {
                classes.push(VertexSet::empty(g.n()));
                classes.len() - 1
            });
        classes[slot].insert(v);
        running = running.max(slot + 1);
        out.push((v, running));
    }
    out.reverse();
}

struct MaxCliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MaxCliqueSearch<'_> {
    fn expand(&mut self, cand: VertexSet) {
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let mut order = Vec::new();
        suffix_colour_bounds(self.g, &cand, &mut order);
        for (v, bound) in order {
            if self.current.len() + bound <= self.best.len() {
                break;
            }
            let mut next = cand.intersection(self.g.neighbors(v));
            // keep only vertices after v so each clique is visited once, ascending
            for u in next.clone().iter().take_while(|&u| u < v) {
                next.remove(u);
            }
            self.current.push(v);
            self.expand(next);
            self.current.pop();
        }
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
    }
}

/// Lexicographically smallest maximum clique of `g[cand]`, sorted ascending.
pub fn max_clique_within(g: &Graph, cand: &VertexSet) -> Vec<usize> {
    let mut search = MaxCliqueSearch {
        g,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(cand.clone());
    search.best
}

/// A maximum clique of `g` (lexicographically smallest among maximum ones).
///
/// Empty for the null graph, a single vertex for an edgeless graph.
pub fn max_clique_exact(g: &Graph) -> Vec<usize> {
    max_clique_within(g, &g.vertices())
}

/// A maximum stable set of `g`, via a maximum clique of the complement.
pub fn max_stable_exact(g: &Graph) -> Vec<usize> {
    max_clique_exact(&g.complement())
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique_exact(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    max_stable_exact(g).len()
}

struct CoverageSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    best: Option<(Vec<usize>, usize)>,
    best_score: usize,
    current: Vec<usize>,
    current_set: VertexSet,
    score: usize,
    nodes: u64,
}

impl CoverageSearch<'_> {
    /// Upper bound on the extra `h`-edges any clique `K ∪ X`, `X ⊆ cand`, can add.
    fn potential(&self, cand: &VertexSet) -> usize {
        // route 1: every h-edge touching cand, counted once
        let gains: Vec<usize> = cand
            .iter()
            .map(|c| self.h.neighbors(c).intersection_len(&self.current_set))
            .collect();
        let internal = self.h.edges_within(cand);
        let flat = gains.iter().sum::<usize>() + internal;

        // route 2: colour classes of g are stable, a clique takes at most one vertex
        // from each; charge half of each internal h-edge to either end
        let mut classes: Vec<(VertexSet, usize)> = Vec::new();
        for (c, gain) in cand.iter().zip(gains) {
            let weight2 = 2 * gain + self.h.neighbors(c).intersection_len(cand);
            let nbrs = self.g.neighbors(c);
            match classes
                .iter_mut()
                .find(|(set, _)| set.intersection_len(nbrs) == 0)
            {
                Some((set, w)) => {
                    set.insert(c);
                    *w = (*w).max(weight2);
                }
                None => {
                    let mut set = VertexSet::empty(self.g.n());
                    set.insert(c);
                    classes.push((set, weight2));
                }
            }
        }
        let coloured = classes.iter().map(|(_, w)| w).sum::<usize>() / 2;
        flat.min(coloured)
    }

    fn expand(&mut self, cand: VertexSet) {
        self.nodes += 1;
        if self.score > self.best_score {
            self.best_score = self.score;
            self.best = Some((self.current.clone(), self.score));
        }
        if cand.is_empty() || self.score + self.potential(&cand) <= self.best_score {
            return;
        }
        for v in cand.iter() {
            let gain = self.h.neighbors(v).intersection_len(&self.current_set);
            let mut next = cand.intersection(self.g.neighbors(v));
            for u in next.clone().iter().take_while(|&u| u <= v) {
                next.remove(u);
            }
            self.current.push(v);
            self.current_set.insert(v);
            self.score += gain;
            self.expand(next);
            self.score -= gain;
            self.current_set.remove(v);
            self.current.pop();
        }
    }
}

/// Clique of `g` containing the most edges of `h` (same vertex set), provided
/// that number is at least `min_score`.
///
/// Only vertices with positive `h`-degree are considered. Returns the
/// lexicographically first maximiser and its score, or `None` when no clique
/// reaches `min_score`.
pub fn max_coverage_clique(g: &Graph, h: &Graph, min_score: usize) -> Option<(Vec<usize>, usize)> {
    debug_assert_eq!(g.n(), h.n());
    let cand = VertexSet::from_iter_n(g.n(), (0..g.n()).filter(|&v| h.degree(v) > 0));
    let mut search = CoverageSearch {
        g,
        h,
        best: None,
        best_score: min_score.saturating_sub(1),
        current: Vec::new(),
        current_set: VertexSet::empty(g.n()),
        score: 0,
        nodes: 0,
    };
    search.expand(cand);
    search.best
}

/// Every maximal clique of `g`, each sorted, in lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting; the outer level walks a degeneracy
/// ordering. Isolated vertices yield singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let order = degeneracy_order(g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let mut later = VertexSet::empty(n);
        let mut earlier = VertexSet::empty(n);
        for u in g.neighbors(v).iter() {
            if pos[u] > pos[v] {
                later.insert(u);
            } else {
                earlier.insert(u);
            }
        }
        let mut r = vec![v];
        bron_kerbosch(g, &mut r, later, earlier, &mut out);
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let branch = p.difference(g.neighbors(pivot));
    for v in branch.iter() {
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            out,
        );
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Repeatedly removes a minimum-degree vertex (lowest id on ties).
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = VertexSet::full(n);
    let mut order = Vec::with_capacity(n);
    while let Some(v) = alive.iter().min_by_key(|&v| (deg[v], v)) {
        alive.remove(v);
        order.push(v);
        for u in g.neighbors(v).intersection(&alive).iter() {
            deg[u] -= 1;
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn small_cases() {
        assert_eq!(max_clique_exact(&Graph::cycle(5)), vec![0, 1]);
        assert_eq!(max_clique_exact(&Graph::complete(4)), vec![0, 1, 2, 3]);
        assert_eq!(max_clique_exact(&Graph::edgeless(3)), vec![0]);
        assert!(max_clique_exact(&Graph::edgeless(0)).is_empty());
        assert_eq!(max_stable_exact(&Graph::cycle(5)).len(), 2);
    }

    #[test]
    fn lexicographic_tie_break() {
        // two disjoint triangles joined by an edge: {0,1,2} beats {3,4,5}
        let g = build_graph(6, &[(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(max_clique_exact(&g), vec![0, 1, 2]);
        let cand = VertexSet::from_iter_n(6, [1, 2, 3, 4, 5]);
        assert_eq!(max_clique_within(&g, &cand), vec![3, 4, 5]);
    }

    #[test]
    fn coverage_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(
            max_coverage_clique(&k4, &k4, 3),
            Some((vec![0, 1, 2, 3], 6))
        );
        let c5 = Graph::cycle(5);
        assert_eq!(max_coverage_clique(&c5, &c5, 2), None);
        let single = build_graph(4, &[(0, 1)]).unwrap();
        assert_eq!(max_coverage_clique(&k4, &single, 2), None);
        assert_eq!(max_coverage_clique(&k4, &single, 1), Some((vec![0, 1], 1)));
    }

    #[test]
    fn maximal_cliques_of_c4_and_k4() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            maximal_cliques(&c4),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(maximal_cliques(&Graph::complete(4)), vec![vec![0, 1, 2, 3]]);
        assert_eq!(maximal_cliques(&Graph::edgeless(2)), vec![vec![0], vec![1]]);
    }
}
