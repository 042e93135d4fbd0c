//! Experiment orchestration: corpora, sweeps and result tables.

pub mod canon;
pub mod conjecture;
pub mod corpus;
pub mod experiment;
pub mod lowerbound;

use thiserror::Error;

use crate::algo::AlgoError;
use crate::cover::CoverReport;

pub use conjecture::{conjecture_sweep, ConjectureReport, ConjectureRow, SweepStatus};
pub use corpus::{gnp_grid, named_graphs, standard_corpus, NamedGraph};
pub use experiment::{run_experiment, ExperimentOutput, ExperimentSpec, FamilySpec, ResultRow};
pub use lowerbound::{lowerbound_experiment, LowerBoundOptions, LowerBoundRow};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid experiment spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Algo(#[from] AlgoError),
    #[error("{algorithm} produced an invalid cover on {instance_id}: {report:?}; trace: {trace}")]
    InvalidCover {
        instance_id: String,
        algorithm: String,
        report: Box<CoverReport>,
        trace: String,
    },
    #[error("{algorithm} returned {cover_size} cliques on {instance_id}, below the exact minimum {oracle_min}")]
    OracleViolation {
        instance_id: String,
        algorithm: String,
        cover_size: usize,
        oracle_min: usize,
    },
    #[error("exact minimum {oracle_min} on join m={m} is below the certified lower bound {bound}")]
    LowerBoundViolation {
        m: usize,
        bound: usize,
        oracle_min: usize,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(String),
}
