//! Two-phase threshold cover with its step trace and post-hoc audit.

use cliquecover::algo::{audit_threshold_trace, greedy_threshold_cover, CoverParams};
use cliquecover::generators::random_gnp;
use cliquecover::{validate_cover, Algorithm, Provenance};

fn main() {
    let g = random_gnp(30, 0.6, 7).unwrap();
    for params in [CoverParams::faithful(3, 2), CoverParams::practical(3, 2)] {
        let (cover, trace) = greedy_threshold_cover(&g, &params);
        let bound = Algorithm::Threshold.bound(g.n(), &params).unwrap();
        println!(
            "{:?}: {} cliques (phase 1: {}, phase 2: {}, fallback: {}), bound {:.1}, valid {}",
            params.mode,
            cover.size(),
            trace.count(Provenance::Phase1),
            trace.count(Provenance::Phase2),
            trace.count(Provenance::Fallback),
            bound.value,
            validate_cover(&g, &cover).valid,
        );
        println!(
            "  phase-1 threshold {}, first steps:",
            params.phase1_threshold(g.n())
        );
        for step in trace.steps.iter().take(4) {
            println!(
                "    {:?} {:?} +{}",
                step.phase,
                step.clique.members(),
                step.newly_covered
            );
        }
        let violations = audit_threshold_trace(&g, &params, &trace);
        println!(
            "  audit: {} violations (exact search: {})",
            violations.len(),
            trace.exact_search
        );
    }
}
