//! The `lab` command line.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 a validity check failed.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algo::{Algorithm, CoverParams, Mode};
use crate::cover::{validate_cover, Clique, CliqueCover, Provenance};
use crate::edgelist::{read_edge_list, to_edge_list};
use crate::generators::{complete_bipartite, incidence_c4free, join_lowerbound, random_gnp};
use crate::graph::Graph;
use crate::harness::{
    conjecture_sweep, lowerbound_experiment, run_experiment, ExperimentSpec, LowerBoundOptions,
};
use crate::oracle::{
    clique_number, contains_induced_kst, independence_number, ramsey_search, summarize,
    DEFAULT_BUDGET,
};

type CliResult<T> = Result<T, Box<dyn Error>>;

/// Largest order for which `gen` certifies alpha and omega in its sidecar.
const SIDECAR_ORACLE_MAX_N: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "lab", version, about = "Edge clique cover laboratory")]
pub struct Cli {
    /// Seed for every randomised step.
    #[arg(long, global = true, env = "LAB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph as an edge list (plus a `.json` sidecar with `-o`).
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run a cover algorithm and report it as JSON.
    Cover {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Threshold)]
        algo: Algorithm,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact alpha, omega and minimum clique cover.
    Exact {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Validate a cover (a `lab cover` report or a bare list of cliques).
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Run an experiment spec.
    Experiment {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Include every cover in the JSON output.
        #[arg(long)]
        emit_covers: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check `min_ecc <= n` on graphs with alpha <= 2.
    Conjecture {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Sampled graphs per order above the exhaustive range.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Print every row, not just the per-order summary.
        #[arg(long)]
        rows: bool,
    },
    /// Search for a graph with alpha < s and omega <= max-omega.
    Ramsey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        max_omega: usize,
        #[arg(long, default_value_t = 20_000)]
        max_iters: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certified join lower bounds for a range of witness sizes.
    Lowerbound {
        #[arg(long)]
        s: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Seeds tried per size, starting from `--seed`.
        #[arg(long, default_value_t = 4)]
        attempts: u64,
        #[arg(long)]
        max_omega: Option<usize>,
        #[arg(long, default_value_t = 20_000)]
        max_iters: u64,
        #[arg(long, default_value_t = 10)]
        oracle_cutoff: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// Complete bipartite `K_{a,b}`.
    Kab {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Erdős–Rényi `G(n, p)`.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Point-line incidence graph of the projective plane over a prime field.
    Incidence {
        #[arg(long)]
        q: u64,
    },
    /// Join of two copies of a searched witness with alpha < s.
    Join {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_omega: Option<usize>,
        #[arg(long, default_value_t = 20_000)]
        max_iters: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 3)]
    pub s: usize,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    #[arg(long, value_enum, default_value_t = Mode::PaperFaithful)]
    pub mode: Mode,
    #[arg(long)]
    pub remainder_factor: Option<f64>,
    #[arg(long)]
    pub partition_factor: Option<f64>,
}

impl ParamArgs {
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
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Whether every validity check in a command passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    CheckFailed,
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(read_edge_list(path)?)
}

fn load_cover(path: &Path) -> CliResult<CliqueCover> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let value: Value = serde_json::from_str(&text)?;
    let list = match value {
        Value::Object(mut obj) => obj
            .remove("cliques")
            .ok_or("cover object has no `cliques` field")?,
        other => other,
    };
    let raw: Vec<Vec<usize>> = serde_json::from_value(list)?;
    Ok(CliqueCover::from_cliques(
        raw.into_iter().map(Clique::new).collect(),
        Provenance::External,
    ))
}

fn gen(family: &GenFamily, seed: u64) -> CliResult<(Graph, Value)> {
    Ok(match *family {
        GenFamily::Kab { a, b } => (
            complete_bipartite(a, b),
            json!({"family": "kab", "a": a, "b": b}),
        ),
        GenFamily::Gnp { n, p } => (
            random_gnp(n, p, seed)?,
            json!({"family": "gnp", "n": n, "p": p, "seed": seed}),
        ),
        GenFamily::Incidence { q } => {
            let g = incidence_c4free(q)?;
            let k22_free = contains_induced_kst(&g, 2, 2)?.is_none();
            (
                g,
                json!({"family": "incidence", "q": q, "k22_free": k22_free}),
            )
        }
        GenFamily::Join {
            s,
            m,
            max_omega,
            max_iters,
        } => {
            let w = ramsey_search(
                m,
                s,
                max_omega.unwrap_or(s.saturating_sub(1)),
                seed,
                max_iters,
            )?;
            let inst = join_lowerbound(&w)?;
            let meta = json!({
                "family": "join",
                "s": s,
                "m": m,
                "seed": seed,
                "base_omega": w.omega,
                "cross_edges": inst.cross_edges,
                "clique_cross_cap": inst.clique_cross_cap,
                "cover_lower_bound": inst.cover_lower_bound,
            });
            (inst.joined, meta)
        }
    })
}

/// Runs one parsed invocation.
pub fn run(cli: Cli) -> CliResult<Outcome> {
    let seed = cli.seed;
    match cli.command {
        Command::Gen { family, output } => {
            let (g, mut meta) = gen(&family, seed)?;
            let obj = meta.as_object_mut().expect("object");
            obj.insert("n".into(), json!(g.n()));
            obj.insert("edge_count".into(), json!(g.edge_count()));
            obj.insert("graph_hash".into(), json!(g.content_hash()));
            if g.n() <= SIDECAR_ORACLE_MAX_N {
                obj.insert("alpha".into(), json!(independence_number(&g)));
                obj.insert("omega".into(), json!(clique_number(&g)));
            }
            emit(output.as_deref(), &to_edge_list(&g))?;
            if let Some(path) = output {
                let mut side = path.into_os_string();
                side.push(".json");
                emit(Some(Path::new(&side)), &pretty(&meta))?;
            }
            Ok(Outcome::Ok)
        }
        Command::Cover {
            input,
            algo,
            params,
            output,
        } => {
            let g = load_graph(&input)?;
            let p = params.params();
            let out = algo.run(&g, &p)?;
            let report = validate_cover(&g, &out.cover);
            let bound = algo.bound(g.n(), &p);
            let ratio = bound
                .filter(|b| b.value > 0.0)
                .map(|b| out.cover.size() as f64 / b.value);
            let doc = json!({
                "algorithm": algo,
                "params": p,
                "size": out.cover.size(),
                "cliques": out.cover.cliques,
                "provenance": out.cover.provenance,
                "trace": out.trace,
                "partition": out.partition,
                "bound": bound,
                "bound_ratio": ratio,
                "valid": report.valid,
                "graph_hash": g.content_hash(),
            });
            emit(output.as_deref(), &pretty(&doc))?;
            Ok(if report.valid {
                Outcome::Ok
            } else {
                Outcome::CheckFailed
            })
        }
        Command::Exact { input, budget } => {
            let g = load_graph(&input)?;
            emit(None, &pretty(&summarize(&g, budget)))?;
            Ok(Outcome::Ok)
        }
        Command::Verify { input, cover } => {
            let g = load_graph(&input)?;
            let cover = load_cover(&cover)?;
            let report = validate_cover(&g, &cover);
            emit(None, &pretty(&report))?;
            Ok(if report.valid {
                Outcome::Ok
            } else {
                Outcome::CheckFailed
            })
        }
        Command::Experiment {
            spec,
            format,
            emit_covers,
            output,
        } => {
            let text = fs::read_to_string(&spec).map_err(|e| format!("{}: {e}", spec.display()))?;
            let mut spec: ExperimentSpec = serde_json::from_str(&text)?;
            spec.emit_covers |= emit_covers;
            let out = match run_experiment(&spec) {
                Ok(out) => out,
                Err(
                    e @ (crate::harness::HarnessError::InvalidCover { .. }
                    | crate::harness::HarnessError::OracleViolation { .. }),
                ) => {
                    eprintln!("lab: {e}");
                    return Ok(Outcome::CheckFailed);
                }
                Err(e) => return Err(e.into()),
            };
            for s in &out.skipped {
                eprintln!("lab: skipped {}: {}", s.instance_id, s.reason);
            }
            let text = match format {
                Format::Csv => out.to_csv()?,
                Format::Json => {
                    let mut s = out.to_json();
                    s.push('\n');
                    s
                }
            };
            emit(output.as_deref(), &text)?;
            Ok(Outcome::Ok)
        }
        Command::Conjecture {
            max_n,
            samples,
            budget,
            rows,
        } => {
            let report = conjecture_sweep(max_n, samples, seed, budget);
            let per_n: Vec<Value> = (1..=max_n)
                .map(|n| {
                    let of_n: Vec<_> = report.rows.iter().filter(|r| r.n == n).collect();
                    json!({
                        "n": n,
                        "graphs": of_n.len(),
                        "exhaustive": of_n.first().map(|r| r.exhaustive),
                        "tight": of_n.iter().filter(|r| r.min_ecc == Some(n)).count(),
                        "skipped": of_n.iter().filter(|r| r.min_ecc.is_none()).count(),
                        "max_min_ecc": of_n.iter().filter_map(|r| r.min_ecc).max(),
                    })
                })
                .collect();
            let counterexamples: Vec<_> = report.counterexamples().collect();
            for c in &counterexamples {
                eprintln!(
                    "lab: COUNTEREXAMPLE n={} code={} min_ecc={:?}",
                    c.n, c.code, c.min_ecc
                );
            }
            let mut doc = json!({
                "max_n": max_n,
                "samples": samples,
                "seed": seed,
                "summary": per_n,
                "skipped": report.skipped(),
                "counterexamples": counterexamples,
            });
            if rows {
                doc["rows"] = json!(report.rows);
            }
            emit(None, &pretty(&doc))?;
            Ok(if counterexamples.is_empty() {
                Outcome::Ok
            } else {
                Outcome::CheckFailed
            })
        }
        Command::Ramsey {
            n,
            s,
            max_omega,
            max_iters,
            output,
        } => {
            let w = ramsey_search(n, s, max_omega, seed, max_iters)?;
            match output {
                Some(path) => {
                    emit(Some(&path), &to_edge_list(&w.graph))?;
                    let mut side = path.into_os_string();
                    side.push(".json");
                    emit(Some(Path::new(&side)), &pretty(&w))?;
                }
                None => emit(None, &pretty(&w))?,
            }
            Ok(Outcome::Ok)
        }
        Command::Lowerbound {
            s,
            sizes,
            attempts,
            max_omega,
            max_iters,
            oracle_cutoff,
            format,
        } => {
            let seeds: Vec<u64> = (0..attempts.max(1)).map(|i| seed.wrapping_add(i)).collect();
            let opts = LowerBoundOptions {
                max_omega,
                max_iters,
                oracle_cutoff,
                ..Default::default()
            };
            let rows = lowerbound_experiment(s, &sizes, &seeds, &opts)?;
            let text = match format {
                Format::Json => pretty(&rows),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    for r in &rows {
                        w.serialize(r)?;
                    }
                    String::from_utf8(w.into_inner().map_err(|e| e.into_error())?)?
                }
            };
            emit(None, &text)?;
            Ok(Outcome::Ok)
        }
    }
}

/// Entry point of the `lab` binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("lab: {e}");
            ExitCode::from(1)
        }
    }
}
