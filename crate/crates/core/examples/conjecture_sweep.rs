//! Minimum clique covers of every graph with independence number at most 2
//! on up to 7 vertices, and sampled ones on 8 and 9.

use cliquecover::harness::conjecture_sweep;
use cliquecover::oracle::DEFAULT_BUDGET;

fn main() {
    let report = conjecture_sweep(9, 40, 1, DEFAULT_BUDGET);
    println!(
        "{:>2} {:>7} {:>10} {:>6} {:>8}",
        "n", "graphs", "exhaustive", "tight", "max ecc"
    );
    for n in 1..=report.max_n {
        let rows: Vec<_> = report.rows.iter().filter(|r| r.n == n).collect();
        println!(
            "{n:>2} {:>7} {:>10} {:>6} {:>8}",
            rows.len(),
            rows[0].exhaustive,
            rows.iter().filter(|r| r.min_ecc == Some(n)).count(),
            rows.iter().filter_map(|r| r.min_ecc).max().unwrap_or(0)
        );
    }
    println!("skipped: {}", report.skipped());
    let bad: Vec<_> = report.counterexamples().collect();
    if bad.is_empty() {
        println!("no graph needs more than n cliques");
    } else {
        println!("COUNTEREXAMPLES: {bad:#?}");
    }
}
