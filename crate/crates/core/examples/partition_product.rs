//! Clique partition of a graph with no stable 3-set, and the product cover
//! built from it.

use cliquecover::algo::{clique_partition, partition_product_cover, CoverParams};
use cliquecover::harness::conjecture::random_triangle_free;
use cliquecover::oracle::{independence_number, min_ecc_size, DEFAULT_BUDGET};
use cliquecover::validate_cover;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [8, 10, 16, 24] {
        let g = random_triangle_free(n, &mut rng).complement();
        assert!(independence_number(&g) < 3);
        for params in [CoverParams::faithful(3, 2), CoverParams::practical(3, 2)] {
            let parts = clique_partition(&g, 3, &params).unwrap();
            let cover = partition_product_cover(&g, &parts, true).unwrap();
            let raw = partition_product_cover(&g, &parts, false).unwrap();
            assert!(validate_cover(&g, &cover).valid);
            let min = if n <= 10 {
                min_ecc_size(&g, DEFAULT_BUDGET).map_or("-".into(), |k| k.to_string())
            } else {
                "-".into()
            };
            println!(
                "n={n:>2} {:?}: {} parts, cover {} (undeduplicated {}), min_ecc {min}",
                params.mode,
                parts.len(),
                cover.size(),
                raw.size()
            );
        }
    }
}
