//! The pair-deletion cover against floor(n^2/4) and the exact optimum.

use cliquecover::algo::quadratic_baseline_cover;
use cliquecover::generators::{complete_bipartite, random_gnp};
use cliquecover::oracle::{min_ecc_size, DEFAULT_BUDGET};
use cliquecover::validate_cover;

fn main() {
    println!(
        "{:<16} {:>4} {:>6} {:>8} {:>7}",
        "graph", "n", "cover", "n^2/4", "min_ecc"
    );
    let mut graphs: Vec<(String, _)> = (2..=5)
        .map(|a| (format!("K{a},{a}"), complete_bipartite(a, a)))
        .collect();
    for (i, p) in [0.2, 0.5, 0.8].into_iter().enumerate() {
        graphs.push((format!("G(10,{p})"), random_gnp(10, p, i as u64).unwrap()));
        graphs.push((format!("G(60,{p})"), random_gnp(60, p, i as u64).unwrap()));
    }
    for (name, g) in &graphs {
        let cover = quadratic_baseline_cover(g);
        assert!(validate_cover(g, &cover).valid);
        let min = if g.n() <= 10 {
            min_ecc_size(g, DEFAULT_BUDGET).map_or("-".into(), |k| k.to_string())
        } else {
            "-".into()
        };
        println!(
            "{name:<16} {:>4} {:>6} {:>8} {:>7}",
            g.n(),
            cover.size(),
            g.n() * g.n() / 4,
            min
        );
    }
}
