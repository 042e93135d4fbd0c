//! Algorithm × instance sweeps with validation, bounds and oracle comparison.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::corpus::{named_graphs, NamedGraph};
use super::HarnessError;
use crate::algo::{Algorithm, CoverParams, Mode};
use crate::cover::{validate_cover, Clique};
use crate::edgelist::read_edge_list;
use crate::generators::{complete_bipartite, incidence_c4free, join_lowerbound, random_gnp};
use crate::oracle::{min_ecc_size, ramsey_search, OracleError, DEFAULT_BUDGET};

/// One instance family and its parameter ranges.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `K_{a,b}` for each listed pair.
    Kab { pairs: Vec<(usize, usize)> },
    /// `G(n, p)` for each `n`, `p` and experiment seed.
    Gnp { n: Vec<usize>, p: Vec<f64> },
    /// Projective-plane incidence graphs for each prime `q`.
    Incidence { q: Vec<u64> },
    /// Join of two copies of a searched witness, for each `m` and experiment seed.
    Join {
        s: usize,
        m: Vec<usize>,
        #[serde(default)]
        max_omega: Option<usize>,
        #[serde(default = "default_iters")]
        max_iters: u64,
    },
    /// Graphs from [`named_graphs`] by id.
    Named { names: Vec<String> },
    /// An edge-list file.
    File { path: PathBuf },
}

fn default_iters() -> u64 {
    10_000
}
fn default_algorithms() -> Vec<Algorithm> {
    Algorithm::ALL.to_vec()
}
fn default_s() -> usize {
    3
}
fn default_t() -> usize {
    2
}
fn default_mode() -> Mode {
    Mode::PaperFaithful
}
fn default_seeds() -> Vec<u64> {
    vec![0]
}
fn default_cutoff() -> usize {
    10
}
fn default_budget() -> u64 {
    DEFAULT_BUDGET
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    #[serde(default)]
    pub instances: Vec<FamilySpec>,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<Algorithm>,
    #[serde(default = "default_s")]
    pub s: usize,
    #[serde(default = "default_t")]
    pub t: usize,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    #[serde(default)]
    pub remainder_factor: Option<f64>,
    #[serde(default)]
    pub partition_factor: Option<f64>,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    /// Compare with the exact minimum cover when `n` is at most this.
    #[serde(default = "default_cutoff")]
    pub oracle_cutoff: usize,
    #[serde(default = "default_budget")]
    pub oracle_budget: u64,
    /// Include wall-clock runtimes; makes output non-reproducible.
    #[serde(default)]
    pub record_timings: bool,
    #[serde(default)]
    pub emit_covers: bool,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

impl ExperimentSpec {
    pub fn params(&self) -> CoverParams {
        let mut p = CoverParams::new(self.s, self.t, self.mode);
        if let Some(r) = self.remainder_factor {
            p.remainder_factor = r;
        }
        if let Some(f) = self.partition_factor {
            p.partition_factor = f;
        }
        p
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        self.params()
            .validate()
            .map_err(|e| HarnessError::Spec(e.to_string()))?;
        if self.seeds.is_empty() {
            return Err(HarnessError::Spec("seeds must be non-empty".into()));
        }
        for fam in &self.instances {
            if let FamilySpec::Gnp { p, .. } = fam {
                if let Some(bad) = p.iter().find(|p| !(0.0..=1.0).contains(*p)) {
                    return Err(HarnessError::Spec(format!("gnp p = {bad} outside [0, 1]")));
                }
            }
            if let FamilySpec::Incidence { q } = fam {
                if let Some(bad) = q.iter().find(|&&q| !crate::generators::is_prime(q)) {
                    return Err(HarnessError::Spec(format!(
                        "incidence q = {bad} is not prime"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub instance_id: String,
    pub family: String,
    pub n: usize,
    pub edge_count: usize,
    pub algorithm: Algorithm,
    pub cover_size: usize,
    pub bound_value: Option<f64>,
    pub bound_ratio: Option<f64>,
    pub oracle_min: Option<usize>,
    /// `exact`, `above_cutoff` or `budget_exceeded`.
    pub oracle_status: String,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_us: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<Vec<Clique>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedInstance {
    pub instance_id: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentOutput {
    pub spec: ExperimentSpec,
    pub rows: Vec<ResultRow>,
    pub skipped: Vec<SkippedInstance>,
}

/// Column order of [`ExperimentOutput::to_csv`].
pub const CSV_COLUMNS: [&str; 12] = [
    "instance_id",
    "family",
    "n",
    "edge_count",
    "algorithm",
    "cover_size",
    "bound_value",
    "bound_ratio",
    "oracle_min",
    "oracle_status",
    "valid",
    "runtime_us",
];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl ExperimentOutput {
    pub fn to_csv(&self) -> Result<String, HarnessError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS)?;
        for r in &self.rows {
            w.write_record([
                r.instance_id.clone(),
                r.family.clone(),
                r.n.to_string(),
                r.edge_count.to_string(),
                r.algorithm.name().to_string(),
                r.cover_size.to_string(),
                opt(&r.bound_value),
                opt(&r.bound_ratio),
                opt(&r.oracle_min),
                r.oracle_status.clone(),
                r.valid.to_string(),
                opt(&r.runtime_us),
            ])?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| HarnessError::Io(e.into_error().to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Expands the families into concrete instances, in spec order.
pub fn expand_instances(spec: &ExperimentSpec) -> (Vec<NamedGraph>, Vec<SkippedInstance>) {
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    for fam in &spec.instances {
        match fam {
            FamilySpec::Kab { pairs } => {
                for &(a, b) in pairs {
                    out.push(NamedGraph::new(
                        format!("kab:a={a},b={b}"),
                        "kab",
                        complete_bipartite(a, b),
                    ));
                }
            }
            FamilySpec::Gnp { n, p } => {
                for &n in n {
                    for &p in p {
                        for &seed in &spec.seeds {
                            match random_gnp(n, p, seed) {
                                Ok(g) => out.push(NamedGraph::new(
                                    format!("gnp:n={n},p={p},seed={seed}"),
                                    "gnp",
                                    g,
                                )),
                                Err(e) => skipped.push(SkippedInstance {
                                    instance_id: format!("gnp:n={n},p={p},seed={seed}"),
                                    reason: e.to_string(),
                                }),
                            }
                        }
                    }
                }
            }
            FamilySpec::Incidence { q } => {
                for &q in q {
                    let id = format!("incidence:q={q}");
                    match incidence_c4free(q) {
                        Ok(g) => out.push(NamedGraph::new(id, "incidence", g)),
                        Err(e) => skipped.push(SkippedInstance {
                            instance_id: id,
                            reason: e.to_string(),
                        }),
                    }
                }
            }
            FamilySpec::Join {
                s,
                m,
                max_omega,
                max_iters,
            } => {
                for &m in m {
                    for &seed in &spec.seeds {
                        let id = format!("join:s={s},m={m},seed={seed}");
                        let omega = max_omega.unwrap_or(s.saturating_sub(1));
                        let built = ramsey_search(m, *s, omega, seed, *max_iters)
                            .map_err(|e| e.to_string())
                            .and_then(|w| join_lowerbound(&w).map_err(|e| e.to_string()));
                        match built {
                            Ok(inst) => out.push(NamedGraph::new(id, "join", inst.joined)),
                            Err(reason) => skipped.push(SkippedInstance {
                                instance_id: id,
                                reason,
                            }),
                        }
                    }
                }
            }
            FamilySpec::Named { names } => {
                let all = named_graphs();
                for name in names {
                    match all.iter().find(|g| &g.id == name) {
                        Some(g) => out.push(g.clone()),
                        None => skipped.push(SkippedInstance {
                            instance_id: format!("named:{name}"),
                            reason: "unknown graph name".into(),
                        }),
                    }
                }
            }
            FamilySpec::File { path } => {
                let id = format!("file:{}", path.display());
                match read_edge_list(path) {
                    Ok(g) => out.push(NamedGraph::new(id, "file", g)),
                    Err(e) => skipped.push(SkippedInstance {
                        instance_id: id,
                        reason: e.to_string(),
                    }),
                }
            }
        }
    }
    (out, skipped)
}

fn oracle_for(g: &NamedGraph, spec: &ExperimentSpec) -> (Option<usize>, &'static str) {
    if g.graph.n() > spec.oracle_cutoff {
        return (None, "above_cutoff");
    }
    match min_ecc_size(&g.graph, spec.oracle_budget) {
        Ok(v) => (Some(v), "exact"),
        Err(OracleError::BudgetExceeded { .. }) => (None, "budget_exceeded"),
        Err(OracleError::InvalidParameters(_)) => (None, "invalid"),
    }
}

/// Runs every (instance, algorithm) cell.
///
/// Cells run in parallel; rows come back ordered by instance (spec order)
/// then algorithm (spec order), so the output does not depend on scheduling.
/// An invalid cover, or a cover smaller than the exact optimum, aborts the
/// run.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentOutput, HarnessError> {
    spec.validate()?;
    let params = spec.params();
    let (instances, skipped) = expand_instances(spec);
    let oracle: Vec<(Option<usize>, &'static str)> =
        instances.par_iter().map(|g| oracle_for(g, spec)).collect();
    let cells: Vec<(usize, Algorithm)> = (0..instances.len())
        .flat_map(|i| spec.algorithms.iter().map(move |&a| (i, a)))
        .collect();
    let rows: Vec<Result<ResultRow, HarnessError>> = cells
        .par_iter()
        .map(|&(i, algorithm)| {
            let inst = &instances[i];
            let g = &inst.graph;
            let start = Instant::now();
            let out = algorithm.run(g, &params)?;
            let elapsed = start.elapsed();
            let report = validate_cover(g, &out.cover);
            if !report.valid {
                return Err(HarnessError::InvalidCover {
                    instance_id: inst.id.clone(),
                    algorithm: algorithm.name().into(),
                    report: Box::new(report),
                    trace: serde_json::to_string(&out.trace).unwrap_or_default(),
                });
            }
            let (oracle_min, status) = oracle[i];
            if let Some(min) = oracle_min {
                if min > out.cover.size() {
                    return Err(HarnessError::OracleViolation {
                        instance_id: inst.id.clone(),
                        algorithm: algorithm.name().into(),
                        cover_size: out.cover.size(),
                        oracle_min: min,
                    });
                }
            }
            let bound = algorithm.bound(g.n(), &params).map(|b| b.value);
            Ok(ResultRow {
                instance_id: inst.id.clone(),
                family: inst.family.clone(),
                n: g.n(),
                edge_count: g.edge_count(),
                algorithm,
                cover_size: out.cover.size(),
                bound_value: bound,
                bound_ratio: bound
                    .filter(|&b| b > 0.0)
                    .map(|b| out.cover.size() as f64 / b),
                oracle_min,
                oracle_status: status.to_string(),
                valid: true,
                runtime_us: spec
                    .record_timings
                    .then(|| elapsed.as_micros().min(u64::MAX as u128) as u64),
                cover: spec.emit_covers.then(|| out.cover.cliques.clone()),
            })
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(ExperimentOutput {
        spec: spec.clone(),
        rows,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_spec_empty_table() {
        let out = run_experiment(&ExperimentSpec::default()).unwrap();
        assert!(out.rows.is_empty());
        assert_eq!(out.to_csv().unwrap().lines().count(), 1);
    }

    #[test]
    fn kab_quadratic_rows() {
        let spec: ExperimentSpec = serde_json::from_str(
            r#"{"instances":[{"family":"kab","pairs":[[2,2],[3,3]]}],"algorithms":["quadratic"]}"#,
        )
        .unwrap();
        let out = run_experiment(&spec).unwrap();
        assert_eq!(out.rows.len(), 2);
        for r in &out.rows {
            assert!(r.cover_size as f64 <= r.bound_value.unwrap());
            assert_eq!(r.oracle_min, Some(r.n * r.n / 4));
        }
    }

    #[test]
    fn bad_spec_rejected() {
        let spec: ExperimentSpec =
            serde_json::from_str(r#"{"instances":[{"family":"incidence","q":[4]}]}"#).unwrap();
        assert!(matches!(run_experiment(&spec), Err(HarnessError::Spec(_))));
    }
}
