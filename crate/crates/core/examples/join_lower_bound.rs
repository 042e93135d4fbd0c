//! Certified lower bounds from joining two copies of a graph with small
//! independence and clique numbers.

use cliquecover::generators::join_lowerbound;
use cliquecover::harness::{lowerbound_experiment, LowerBoundOptions};
use cliquecover::oracle::{
    clique_number, independence_number, min_ecc_size, RamseyWitness, DEFAULT_BUDGET,
};
use cliquecover::Graph;

fn main() {
    let c5 = RamseyWitness::certify(Graph::cycle(5), 3, 0, 0).unwrap();
    let inst = join_lowerbound(&c5).unwrap();
    println!(
        "C5 + C5: n={} alpha={} omega={} cross edges={} per-clique cap={} bound={} exact={:?}",
        inst.joined.n(),
        independence_number(&inst.joined),
        clique_number(&inst.joined),
        inst.cross_edges,
        inst.clique_cross_cap,
        inst.cover_lower_bound,
        min_ecc_size(&inst.joined, DEFAULT_BUDGET),
    );

    let rows = lowerbound_experiment(
        4,
        &[1, 4, 6, 8, 10, 12, 14, 16],
        &[0, 1, 2, 3],
        &LowerBoundOptions::default(),
    )
    .unwrap();
    println!("\n s   m   n  omega  bound  shape(c=1)  exact");
    for r in rows {
        println!(
            "{:>2} {:>3} {:>3} {:>6} {:>6} {:>11} {:>6}",
            r.s,
            r.m,
            r.n,
            r.base_omega.map_or("-".into(), |w| w.to_string()),
            r.cover_lower_bound.map_or("-".into(), |b| b.to_string()),
            r.shape_value.map_or("-".into(), |v| format!("{v:.3}")),
            r.oracle_min.map_or("-".into(), |k| k.to_string()),
        );
        if let Some(f) = r.failure {
            println!("    no witness: {f}");
        }
    }
}
