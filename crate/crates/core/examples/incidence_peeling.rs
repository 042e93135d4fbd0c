//! Min-degree peeling on projective-plane incidence graphs, which are
//! K_{2,2}-free with about n^{3/2}/2^{3/2} edges.

use cliquecover::algo::{mindeg_peeling_cover, CoverParams, PeelVariant};
use cliquecover::generators::incidence_c4free;
use cliquecover::oracle::contains_induced_kst;
use cliquecover::validate_cover;

fn main() {
    println!(
        "{:>3} {:>5} {:>6} {:>6} {:>10} {:>9}",
        "q", "n", "edges", "cover", "cover/n^1.5", "K22-free"
    );
    for q in [2, 3, 5, 7, 11] {
        let g = incidence_c4free(q).unwrap();
        let (cover, _) = mindeg_peeling_cover(&g, PeelVariant::K22, &CoverParams::practical(2, 2));
        assert!(validate_cover(&g, &cover).valid);
        let free = contains_induced_kst(&g, 2, 2).unwrap().is_none();
        println!(
            "{q:>3} {:>5} {:>6} {:>6} {:>10.4} {:>9}",
            g.n(),
            g.edge_count(),
            cover.size(),
            cover.size() as f64 / (g.n() as f64).powf(1.5),
            free
        );
    }
}
