//! Instance families: complete bipartite graphs, seeded random graphs,
//! projective-plane incidence graphs, and the join construction behind the
//! cover lower bound.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{build_graph, Edge, Graph};
use crate::oracle::{RamseyError, RamseyWitness};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("q = {0} is not a prime >= 2")]
    NotPrime(u64),
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("base graph rejected: {0}")]
    Uncertified(#[from] RamseyError),
    #[error("base graph has no vertices")]
    EmptyBase,
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<Edge> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    build_graph(a + b, &edges).expect("in range")
}

/// G(n, p): each pair, in canonical order, is an edge with probability `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![VertexSet::empty(n); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build_graph(10, &edges).expect("in range")
}

/// Star `K_{1,leaves}` centred at 0.
pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

pub fn is_prime(q: u64) -> bool {
    q >= 2
        && (2..)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// Normalised representatives of the points of PG(2, q): first nonzero coordinate is 1.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|z| [0, 1, z]));
    for y in 0..q {
        for z in 0..q {
            pts.push([1, y, z]);
        }
    }
    pts
}

/// Point–line incidence graph of the projective plane of prime order `q`.
///
/// Points are vertices `0..N` and lines `N..2N` with `N = q² + q + 1`; a point
/// lies on a line when their coordinate vectors are orthogonal mod `q`.
/// Every vertex has degree `q + 1`, and two points share exactly one line, so
/// the graph has girth 6 and contains no 4-cycle.
pub fn incidence_c4free(q: u64) -> Result<Graph, GeneratorError> {
    if !is_prime(q) {
        return Err(GeneratorError::NotPrime(q));
    }
    let pts = projective_points(q);
    let big_n = pts.len();
    let mut edges = Vec::with_capacity(big_n * (q as usize + 1));
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            let dot = (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q;
            if dot == 0 {
                edges.push((i, big_n + j));
            }
        }
    }
    Ok(build_graph(2 * big_n, &edges).expect("in range"))
}

/// Two copies of a certified base graph joined by every cross edge, with the
/// combinatorial lower bound on any clique cover of the result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBoundInstance {
    pub base: RamseyWitness,
    /// Copy one on `0..m`, copy two on `m..2m`.
    pub joined: Graph,
    /// `m²`.
    pub cross_edges: usize,
    /// `omega(base)²`: the most cross edges a single clique can contain.
    pub clique_cross_cap: usize,
    /// `ceil(m² / omega(base)²)`.
    pub cover_lower_bound: usize,
}

impl LowerBoundInstance {
    pub fn m(&self) -> usize {
        self.base.graph.n()
    }
}

/// Builds the join of two copies of `base.graph`.
///
/// A clique of the join is `K1 ∪ K2` with `Ki` a clique of copy `i`, so it
/// contains `|K1|·|K2| <= omega²` of the `m²` cross edges.
pub fn join_lowerbound(base: &RamseyWitness) -> Result<LowerBoundInstance, GeneratorError> {
    base.verify()?;
    let j = &base.graph;
    let m = j.n();
    if m == 0 {
        return Err(GeneratorError::EmptyBase);
    }
    let mut edges: Vec<Edge> = Vec::with_capacity(2 * j.edge_count() + m * m);
    for (u, v) in j.edges() {
        edges.push((u, v));
        edges.push((m + u, m + v));
    }
    edges.extend((0..m).flat_map(|u| (m..2 * m).map(move |v| (u, v))));
    let joined = build_graph(2 * m, &edges).expect("in range");
    let cross_edges = m * m;
    let clique_cross_cap = base.omega * base.omega;
    Ok(LowerBoundInstance {
        base: base.clone(),
        joined,
        cross_edges,
        clique_cross_cap,
        cover_lower_bound: cross_edges.div_ceil(clique_cross_cap),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_shapes() {
        assert_eq!(
            complete_bipartite(2, 2),
            Graph::cycle(4).induced(&[0, 2, 1, 3])
        );
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(complete_bipartite(0, 5), Graph::edgeless(5));
    }

    #[test]
    fn gnp_extremes_and_determinism() {
        assert_eq!(random_gnp(7, 0.0, 3).unwrap(), Graph::edgeless(7));
        assert_eq!(random_gnp(7, 1.0, 3).unwrap(), Graph::complete(7));
        assert_eq!(
            random_gnp(20, 0.5, 42).unwrap(),
            random_gnp(20, 0.5, 42).unwrap()
        );
        assert_ne!(
            random_gnp(20, 0.5, 42).unwrap(),
            random_gnp(20, 0.5, 43).unwrap()
        );
        assert!(random_gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn incidence_sizes() {
        let g = incidence_c4free(2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (14, 21));
        let g = incidence_c4free(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (26, 52));
        assert!((0..26).all(|v| g.degree(v) == 4));
        assert_eq!(incidence_c4free(4), Err(GeneratorError::NotPrime(4)));
        assert_eq!(incidence_c4free(1), Err(GeneratorError::NotPrime(1)));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn join_of_c5() {
        let base = RamseyWitness::certify(Graph::cycle(5), 3, 0, 0).unwrap();
        let inst = join_lowerbound(&base).unwrap();
        assert_eq!(inst.joined.n(), 10);
        assert_eq!(inst.cross_edges, 25);
        assert_eq!(inst.cover_lower_bound, 7);
        assert_eq!(inst.joined.edge_count(), 35);
    }

    #[test]
    fn join_of_k1() {
        let base = RamseyWitness::certify(Graph::complete(1), 2, 0, 0).unwrap();
        let inst = join_lowerbound(&base).unwrap();
        assert_eq!(inst.joined, Graph::complete(2));
        assert_eq!(inst.cover_lower_bound, 1);
    }

    #[test]
    fn join_rejects_tampered_base() {
        let mut base = RamseyWitness::certify(Graph::cycle(5), 3, 0, 0).unwrap();
        base.omega = 1;
        assert!(join_lowerbound(&base).is_err());
    }
}
