//! Seeded graph corpora shared by the property and acceptance suites.

use serde::{Deserialize, Serialize};

use crate::generators::{complete_bipartite, incidence_c4free, petersen, random_gnp, star};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedGraph {
    pub id: String,
    pub family: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(id: impl Into<String>, family: impl Into<String>, graph: Graph) -> Self {
        Self {
            id: id.into(),
            family: family.into(),
            graph,
        }
    }
}

/// Hand-picked small graphs: cycles, complete and complete bipartite graphs,
/// stars, Petersen and its complement, and the two smallest incidence graphs.
pub fn named_graphs() -> Vec<NamedGraph> {
    let mut out = vec![
        NamedGraph::new("null", "named", Graph::edgeless(0)),
        NamedGraph::new("k1", "named", Graph::complete(1)),
        NamedGraph::new("edgeless6", "named", Graph::edgeless(6)),
        NamedGraph::new("petersen", "named", petersen()),
        NamedGraph::new("petersen-complement", "named", petersen().complement()),
        NamedGraph::new("star5", "named", star(5)),
    ];
    for n in 3..=9 {
        out.push(NamedGraph::new(format!("c{n}"), "named", Graph::cycle(n)));
        out.push(NamedGraph::new(
            format!("k{n}"),
            "named",
            Graph::complete(n),
        ));
    }
    for (a, b) in [(1, 1), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        out.push(NamedGraph::new(
            format!("kab:a={a},b={b}"),
            "kab",
            complete_bipartite(a, b),
        ));
    }
    for q in [2, 3] {
        out.push(NamedGraph::new(
            format!("incidence:q={q}"),
            "incidence",
            incidence_c4free(q).expect("prime"),
        ));
    }
    out
}

/// `G(n, p)` for every `n` in `ns`, `p` in `ps` and `seed` in `seeds`.
pub fn gnp_grid(ns: &[usize], ps: &[f64], seeds: &[u64]) -> Vec<NamedGraph> {
    let mut out = Vec::with_capacity(ns.len() * ps.len() * seeds.len());
    for &n in ns {
        for &p in ps {
            for &seed in seeds {
                out.push(NamedGraph::new(
                    format!("gnp:n={n},p={p},seed={seed}"),
                    "gnp",
                    random_gnp(n, p, seed).expect("p in [0,1]"),
                ));
            }
        }
    }
    out
}

/// The validity corpus: the named graphs plus a `G(n, p)` grid with
/// `n` in `1..=max_n`, five densities and `seeds_per_cell` seeds.
pub fn standard_corpus(max_n: usize, seeds_per_cell: u64, base_seed: u64) -> Vec<NamedGraph> {
    let ns: Vec<usize> = (1..=max_n).collect();
    let seeds: Vec<u64> = (0..seeds_per_cell).map(|i| base_seed + i).collect();
    let mut out = named_graphs();
    out.extend(gnp_grid(&ns, &[0.15, 0.3, 0.5, 0.7, 0.85], &seeds));
    out
}
