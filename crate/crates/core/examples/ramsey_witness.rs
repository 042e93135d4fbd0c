//! Search for graphs with no stable s-set and bounded clique number.
//!
//! `cargo run --release --example ramsey_witness [N S MAX_OMEGA]`

use cliquecover::edgelist::to_edge_list;
use cliquecover::oracle::ramsey_search;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, s, max_omega) = match args[..] {
        [n, s, w] => (n, s, w),
        _ => (8, 4, 3),
    };
    for seed in 0..8 {
        match ramsey_search(n, s, max_omega, seed, 50_000) {
            Ok(w) => {
                println!(
                    "seed {seed}: found after {} moves, omega = {}, {} edges",
                    w.iterations_used,
                    w.omega,
                    w.graph.edge_count()
                );
                print!("{}", to_edge_list(&w.graph));
                return;
            }
            Err(e) => println!("seed {seed}: {e}"),
        }
    }
}
