//! Exact clique number, independence number, induced K_{s,t} detection and
//! minimum clique cover on a few classic graphs.

use cliquecover::generators::{complete_bipartite, petersen};
use cliquecover::oracle::{contains_induced_kst, summarize, DEFAULT_BUDGET};
use cliquecover::Graph;

fn main() {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("K3,3", complete_bipartite(3, 3)),
        ("Petersen", petersen()),
        ("Petersen complement", petersen().complement()),
    ];
    println!(
        "{:<20} {:>3} {:>5} {:>5} {:>7}  witness",
        "graph", "n", "alpha", "omega", "min_ecc"
    );
    for (name, g) in &graphs {
        let s = summarize(g, DEFAULT_BUDGET);
        let kst = contains_induced_kst(g, 2, 2).expect("valid pattern");
        println!(
            "{name:<20} {:>3} {:>5} {:>5} {:>7}  K2,2: {}",
            g.n(),
            s.alpha,
            s.omega,
            s.min_ecc.map_or("budget".into(), |k| k.to_string()),
            kst.map_or("none".into(), |w| format!("{:?} x {:?}", w.a, w.b)),
        );
    }
}
