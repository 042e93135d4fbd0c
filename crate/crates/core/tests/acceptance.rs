//! Acceptance criteria 1–9. Each prints one PASS/FAIL line; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use cliquecover::algo::{
    audit_threshold_trace, greedy_threshold_cover, mindeg_peeling_cover, PeelVariant,
};
use cliquecover::generators::{complete_bipartite, incidence_c4free, join_lowerbound, random_gnp};
use cliquecover::harness::{conjecture_sweep, run_experiment, standard_corpus, ExperimentSpec};
use cliquecover::oracle::{
    clique_number, contains_induced_kst, independence_number, min_ecc_size, ramsey_search,
    RamseyWitness, DEFAULT_BUDGET,
};
use cliquecover::{validate_cover, Algorithm, CoverParams, Graph};

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: u32, name: &str, start: Instant, limit: Duration, out: Outcome) -> bool {
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let pass = out.pass && in_time;
    println!(
        "criterion {id} [{}] {name}: {} ({:.2?} of {:?}{})",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed,
        limit,
        if in_time { "" } else { ", over time" }
    );
    pass
}

fn c1() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for a in [2usize, 3] {
        let t = Instant::now();
        let v = min_ecc_size(&complete_bipartite(a, a), DEFAULT_BUDGET);
        let el = t.elapsed();
        let ok = v == Ok(a * a) && el < Duration::from_secs(1);
        pass &= ok;
        parts.push(format!("K{a},{a} -> {v:?} in {el:.2?}"));
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn c2() -> Outcome {
    let ps = [0.2, 0.5, 0.8];
    let mut violations = 0;
    for i in 0..1000u64 {
        let n = 1 + (i % 60) as usize;
        let p = ps[((i / 60) % 3) as usize];
        let g = random_gnp(n, p, i).unwrap();
        let cover = Algorithm::Quadratic
            .run(&g, &CoverParams::faithful(3, 2))
            .unwrap()
            .cover;
        if cover.size() > n * n / 4 || !validate_cover(&g, &cover).valid {
            violations += 1;
        }
    }
    Outcome {
        pass: violations == 0,
        detail: format!("1000 graphs, {violations} violations"),
    }
}

fn all_params() -> [CoverParams; 2] {
    [CoverParams::faithful(3, 2), CoverParams::practical(3, 2)]
}

fn c3() -> Outcome {
    let corpus = standard_corpus(40, 5, 1000);
    let mut runs = 0;
    let mut failures = Vec::new();
    for inst in &corpus {
        for params in all_params() {
            for algo in Algorithm::ALL {
                runs += 1;
                match algo.run(&inst.graph, &params) {
                    Ok(out) if validate_cover(&inst.graph, &out.cover).valid => {}
                    Ok(_) => failures.push(format!("{algo} {:?} {} invalid", params.mode, inst.id)),
                    Err(e) => failures.push(format!("{algo} {:?} {}: {e}", params.mode, inst.id)),
                }
            }
        }
    }
    Outcome {
        pass: runs >= 5000 && failures.is_empty(),
        detail: format!(
            "{runs} runs over {} graphs, {} failures {:?}",
            corpus.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn c4() -> Outcome {
    let corpus: Vec<_> = standard_corpus(10, 5, 1000)
        .into_iter()
        .filter(|g| g.graph.n() <= 10)
        .collect();
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut skipped = 0;
    for inst in &corpus {
        let Ok(min) = min_ecc_size(&inst.graph, DEFAULT_BUDGET) else {
            skipped += 1;
            continue;
        };
        for params in all_params() {
            for algo in Algorithm::ALL {
                let size = algo.run(&inst.graph, &params).unwrap().cover.size();
                checked += 1;
                if size < min {
                    violations.push(format!("{algo} {} {size} < {min}", inst.id));
                }
            }
        }
    }
    Outcome {
        pass: violations.is_empty() && skipped == 0,
        detail: format!(
            "{} graphs, {checked} comparisons, {skipped} oracle budget skips, {} violations {:?}",
            corpus.len(),
            violations.len(),
            violations.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn c5() -> Outcome {
    let report = conjecture_sweep(7, 0, 0, DEFAULT_BUDGET);
    let bad = report.counterexamples().count();
    let skipped = report.skipped();
    let exhaustive_counts: Vec<usize> = (1..=7)
        .map(|n| report.rows.iter().filter(|r| r.n == n).count())
        .collect();
    // isomorphism classes of triangle-free graphs on 1..=7 vertices
    let expected = vec![1, 2, 3, 7, 14, 38, 107];
    Outcome {
        pass: bad == 0 && skipped == 0 && exhaustive_counts == expected,
        detail: format!(
            "{} graphs (per n {exhaustive_counts:?}), {bad} counterexamples, {skipped} skipped, {} tight",
            report.rows.len(),
            report.tight()
        ),
    }
}

fn c6() -> Outcome {
    let params = CoverParams::practical(2, 2);
    let mut ratios = Vec::new();
    let mut pass = true;
    for q in [2u64, 3, 5, 7] {
        let g = incidence_c4free(q).unwrap();
        let free = contains_induced_kst(&g, 2, 2).unwrap().is_none();
        let (cover, _) = mindeg_peeling_cover(&g, PeelVariant::K22, &params);
        let valid = validate_cover(&g, &cover).valid;
        pass &= free && valid;
        ratios.push((q, cover.size() as f64 / (g.n() as f64).powf(1.5)));
    }
    let r3 = ratios[1].1;
    let r7 = ratios[3].1;
    let max = ratios.iter().map(|r| r.1).fold(0.0, f64::max);
    pass &= r7 <= 1.25 * r3;
    Outcome {
        pass,
        detail: format!(
            "K22-free and valid; ratios {:?}; max {max:.4}; q7/q3 = {:.3}",
            ratios
                .iter()
                .map(|(q, r)| format!("q={q}:{r:.4}"))
                .collect::<Vec<_>>(),
            r7 / r3
        ),
    }
}

fn c7() -> Outcome {
    let params = CoverParams::faithful(3, 2);
    let ps = [0.1, 0.3, 0.5, 0.7, 0.9];
    let mut violations = Vec::new();
    let mut phase1 = 0;
    let mut phase2 = 0;
    for i in 0..200u64 {
        let n = 1 + (i % 40) as usize;
        let p = ps[((i / 40) % 5) as usize];
        let g = random_gnp(n, p, 7000 + i).unwrap();
        let (cover, trace) = greedy_threshold_cover(&g, &params);
        phase1 += trace.count(cliquecover::Provenance::Phase1);
        phase2 += trace.count(cliquecover::Provenance::Phase2);
        if !validate_cover(&g, &cover).valid {
            violations.push(format!("graph {i}: invalid cover"));
        }
        for v in audit_threshold_trace(&g, &params, &trace) {
            violations.push(format!("graph {i}: step {} {}", v.step, v.reason));
        }
    }
    Outcome {
        pass: violations.is_empty(),
        detail: format!(
            "200 graphs, {phase1} phase-1 and {phase2} phase-2 steps, {} violations {:?}",
            violations.len(),
            violations.iter().take(3).collect::<Vec<_>>()
        ),
    }
}

fn c8() -> Outcome {
    let c5 = RamseyWitness::certify(Graph::cycle(5), 3, 0, 0).unwrap();
    let inst = join_lowerbound(&c5).unwrap();
    let alpha = independence_number(&inst.joined);
    let omega = clique_number(&inst.joined);
    let min = min_ecc_size(&inst.joined, DEFAULT_BUDGET);
    let mut pass =
        alpha == 2 && omega == 4 && inst.cover_lower_bound == 7 && matches!(min, Ok(k) if k >= 7);
    let mut detail = format!(
        "C5 join: alpha={alpha} omega={omega} bound={} min_ecc={min:?}",
        inst.cover_lower_bound
    );
    let witness = (0..16).find_map(|seed| ramsey_search(8, 4, 3, seed, 20_000).ok());
    match witness {
        Some(w) => {
            let inst = join_lowerbound(&w).unwrap();
            let alpha = independence_number(&inst.joined);
            pass &= w.omega == 3 && alpha <= 3 && inst.cover_lower_bound == 8;
            detail += &format!(
                "; (8,4) witness seed={} omega={}: alpha(join)={alpha} bound={}",
                w.seed, w.omega, inst.cover_lower_bound
            );
        }
        None => {
            pass = false;
            detail += "; no (8,4,3) witness found";
        }
    }
    Outcome { pass, detail }
}

fn c9() -> Outcome {
    let spec: ExperimentSpec = serde_json::from_str(
        r#"{
            "instances": [
                {"family": "kab", "pairs": [[2, 2], [3, 3], [4, 5]]},
                {"family": "gnp", "n": [8, 20, 35], "p": [0.3, 0.7]},
                {"family": "incidence", "q": [2, 3]},
                {"family": "join", "s": 3, "m": [5]},
                {"family": "named", "names": ["petersen", "c7", "k6"]}
            ],
            "seeds": [1, 2, 3],
            "emit_covers": true
        }"#,
    )
    .unwrap();
    let a = run_experiment(&spec).unwrap();
    let b = run_experiment(&spec).unwrap();
    let (ca, cb) = (a.to_csv().unwrap(), b.to_csv().unwrap());
    let (ja, jb) = (a.to_json(), b.to_json());
    Outcome {
        pass: ca == cb && ja == jb && !a.rows.is_empty(),
        detail: format!(
            "{} rows; csv {} bytes identical={}; json {} bytes identical={}",
            a.rows.len(),
            ca.len(),
            ca == cb,
            ja.len(),
            ja == jb
        ),
    }
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        (1, "K_{a,a} needs a^2 cliques", 2, c1),
        (2, "pair-deletion cover within n^2/4", 30, c2),
        (3, "every algorithm valid on the corpus", 600, c3),
        (4, "no cover below the exact minimum (n <= 10)", 300, c4),
        (
            5,
            "alpha <= 2 graphs up to n = 7 have covers of size <= n",
            600,
            c5,
        ),
        (
            6,
            "incidence graphs: K22-free, peeling ratio stable",
            120,
            c6,
        ),
        (7, "threshold trace audit (faithful mode)", 600, c7),
        (8, "join lower-bound instances", 120, c8),
        (9, "experiment output is byte-identical", 120, c9),
    ];
    let mut failed = Vec::new();
    for (id, name, secs, f) in criteria {
        let start = Instant::now();
        let out = f();
        if !report(id, name, start, Duration::from_secs(secs), out) {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
