//! Parse an edge list, print its canonical form and content hash.
//!
//! `cargo run --example edge_list [FILE]`

use cliquecover::edgelist::{parse_edge_list, read_edge_list, to_edge_list};

const SAMPLE: &str = "\
# a 5-cycle with a chord, listed out of order
5 6
3 4
1 0
2 1
4 0
3 2
0 2
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(path) => read_edge_list(path.as_ref())?,
        None => parse_edge_list(SAMPLE)?,
    };
    let text = to_edge_list(&g);
    print!("{text}");
    println!(
        "# degrees {:?}",
        (0..g.n()).map(|v| g.degree(v)).collect::<Vec<_>>()
    );
    println!("# sha256 {}", g.content_hash());
    assert_eq!(parse_edge_list(&text)?, g);
    Ok(())
}
