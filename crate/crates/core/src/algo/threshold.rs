//! Two-phase threshold cover for `K_{s,t}`-free graphs.
//!
//! Phase 1 takes cliques that each cover at least `⌈n^d⌉` new edges, with
//! `d = 1/(s+t)`. Phase 2 clears every vertex left with at most `n^{1-d}`
//! uncovered edges using `K_2`s. For large enough `n` nothing survives; at
//! desk scale the phases are re-entered and a single-edge fallback
//! guarantees termination.

use serde::{Deserialize, Serialize};

use super::params::{CoverParams, Mode};
use super::trace::{CoverTrace, TraceStep};
use crate::bitset::VertexSet;
use crate::cover::{Clique, CliqueCover, CoverState, Provenance};
use crate::graph::Graph;
use crate::oracle::max_coverage_clique;

/// A clique of `g` containing at least `threshold` edges of `h`, where `h`
/// is a spanning subgraph of `g` (the uncovered edges).
///
/// Exact mode returns the lexicographically first clique of maximum
/// coverage, and `None` certifies that no clique qualifies. Practical mode
/// grows a clique greedily from every seed vertex and can miss one.
pub fn find_heavy_clique(h: &Graph, g: &Graph, threshold: usize, mode: Mode) -> Option<Clique> {
    let threshold = threshold.max(1);
    match mode {
        Mode::PaperFaithful => {
            max_coverage_clique(g, h, threshold).map(|(members, _)| Clique::new(members))
        }
        Mode::Practical => greedy_heavy_clique(h, g, threshold),
    }
}

fn greedy_heavy_clique(h: &Graph, g: &Graph, threshold: usize) -> Option<Clique> {
    let n = g.n();
    let mut best: Option<(usize, VertexSet)> = None;
    for seed in (0..n).filter(|&v| h.degree(v) > 0) {
        let mut clique = VertexSet::empty(n);
        clique.insert(seed);
        let mut cand = g.neighbors(seed).clone();
        let mut score = 0;
        loop {
            let pick = cand
                .iter()
                .map(|c| (h.neighbors(c).intersection_len(&clique), c))
                .filter(|&(gain, _)| gain > 0)
                .max_by_key(|&(gain, c)| (gain, std::cmp::Reverse(c)));
            let Some((gain, c)) = pick else { break };
            clique.insert(c);
            cand.intersect_with(g.neighbors(c));
            score += gain;
        }
        if best.as_ref().is_none_or(|(s, _)| score > *s) {
            best = Some((score, clique));
        }
    }
    best.filter(|(score, _)| *score >= threshold)
        .map(|(_, set)| Clique::from_set(&set))
}

/// Runs both phases to completion; see the module docs.
pub fn greedy_threshold_cover(g: &Graph, p: &CoverParams) -> (CliqueCover, CoverTrace) {
    let n = g.n();
    let heavy = p.phase1_threshold(n);
    let mut state = CoverState::new(g);
    let mut cover = CliqueCover::new();
    let mut trace = CoverTrace::new(p.mode == Mode::PaperFaithful);

    while state.remaining() > 0 {
        let mut progressed = false;

        while let Some(clique) = find_heavy_clique(&state.to_graph(), g, heavy, p.mode) {
            let gained = state.cover(&clique.to_set(n));
            trace.steps.push(TraceStep {
                phase: Provenance::Phase1,
                clique: clique.clone(),
                newly_covered: gained,
                trigger_vertex: None,
                trigger_degree: None,
                m_range: None,
            });
            cover.push(clique, Provenance::Phase1);
            progressed = true;
        }

        // vertices made light by earlier K_2s are picked up on the next scan
        while let Some(v) = (0..n).find(|&v| {
            let deg = state.uncovered_degree(v);
            deg > 0 && p.is_light(n, deg)
        }) {
            let degree = state.uncovered_degree(v);
            for u in state.uncovered_neighbors(v).to_vec() {
                let clique = Clique::new(vec![v, u]);
                let gained = state.cover(&clique.to_set(n));
                trace.steps.push(TraceStep {
                    phase: Provenance::Phase2,
                    clique: clique.clone(),
                    newly_covered: gained,
                    trigger_vertex: Some(v),
                    trigger_degree: Some(degree),
                    m_range: None,
                });
                cover.push(clique, Provenance::Phase2);
            }
            progressed = true;
        }

        if !progressed {
            if let Some((u, v)) = state.first_uncovered_edge() {
                let clique = Clique::new(vec![u, v]);
                let gained = state.cover(&clique.to_set(n));
                trace.steps.push(TraceStep {
                    phase: Provenance::Fallback,
                    clique: clique.clone(),
                    newly_covered: gained,
                    trigger_vertex: None,
                    trigger_degree: None,
                    m_range: None,
                });
                cover.push(clique, Provenance::Fallback);
            }
        }
    }
    (cover, trace)
}

/// A broken trace invariant found by [`audit_threshold_trace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceViolation {
    pub step: usize,
    pub reason: String,
}

/// Replays a threshold-cover trace against `g` and re-checks its invariants.
///
/// * each phase-1 step covers at least `⌈n^d⌉` new edges, as recorded;
/// * each phase-2 trigger had at most `n^{1-d}` uncovered edges when chosen;
/// * no `⌈n^d⌉`-heavy clique exists when a run of phase-2 steps starts,
///   decided by exact search. Coverage only shrinks inside a run, so the
///   first step of each run stands for the whole run.
pub fn audit_threshold_trace(
    g: &Graph,
    p: &CoverParams,
    trace: &CoverTrace,
) -> Vec<TraceViolation> {
    let n = g.n();
    let heavy = p.phase1_threshold(n);
    let mut state = CoverState::new(g);
    let mut out = Vec::new();
    let mut prev_phase = None;
    for (i, step) in trace.steps.iter().enumerate() {
        let set = step.clique.to_set(n);
        match step.phase {
            Provenance::Phase1 => {
                let actual = state.newly_covered_by(&set);
                if actual < heavy || actual != step.newly_covered {
                    out.push(TraceViolation {
                        step: i,
                        reason: format!(
                            "phase-1 clique covers {actual} new edges (recorded {}), threshold {heavy}",
                            step.newly_covered
                        ),
                    });
                }
            }
            Provenance::Phase2 => {
                if let Some(v) = step.trigger_vertex {
                    let fresh_trigger = prev_phase != Some(Provenance::Phase2)
                        || trace.steps[i - 1].trigger_vertex != Some(v);
                    if fresh_trigger {
                        let deg = state.uncovered_degree(v);
                        if Some(deg) != step.trigger_degree || !p.is_light(n, deg) {
                            out.push(TraceViolation {
                                step: i,
                                reason: format!(
                                    "trigger {v} had {deg} uncovered edges, limit {:.3}",
                                    p.phase2_threshold(n)
                                ),
                            });
                        }
                    }
                } else {
                    out.push(TraceViolation {
                        step: i,
                        reason: "phase-2 step without trigger vertex".into(),
                    });
                }
                if prev_phase != Some(Provenance::Phase2) {
                    if let Some(c) =
                        find_heavy_clique(&state.to_graph(), g, heavy, Mode::PaperFaithful)
                    {
                        out.push(TraceViolation {
                            step: i,
                            reason: format!(
                                "heavy clique {:?} existed at phase-2 entry",
                                c.members()
                            ),
                        });
                    }
                }
            }
            _ => {}
        }
        state.cover(&set);
        prev_phase = Some(step.phase);
    }
    if state.remaining() != 0 {
        out.push(TraceViolation {
            step: trace.steps.len(),
            reason: format!("{} edges left uncovered", state.remaining()),
        });
    }
    out
}
