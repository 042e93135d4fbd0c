//! Constructive clique covers and the bounds they are measured against.

mod baseline;
mod bounds;
mod params;
mod partition;
mod peeling;
mod threshold;
mod trace;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use baseline::quadratic_baseline_cover;
pub use bounds::{bound_value, BoundKind, BoundValue};
pub use params::{CoverParams, Mode};
pub use partition::{
    clique_partition, partition_product_cover, partition_threshold, CliquePartition,
};
pub use peeling::{mindeg_peeling_cover, PeelVariant};
pub use threshold::{
    audit_threshold_trace, find_heavy_clique, greedy_threshold_cover, TraceViolation,
};
pub use trace::{CoverTrace, TraceStep};

use crate::cover::CliqueCover;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgoError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed clique partition: {0}")]
    MalformedPartition(String),
}

#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Quadratic,
    Threshold,
    Peel22,
    Peel23,
    PartitionProduct,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Quadratic,
        Algorithm::Threshold,
        Algorithm::Peel22,
        Algorithm::Peel23,
        Algorithm::PartitionProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Quadratic => "quadratic",
            Algorithm::Threshold => "threshold",
            Algorithm::Peel22 => "peel22",
            Algorithm::Peel23 => "peel23",
            Algorithm::PartitionProduct => "partition-product",
        }
    }

    /// The bound this algorithm's output is compared with; constant 1 for
    /// shape-only kinds. `None` when the parameters fall outside the bound's range.
    pub fn bound(self, n: usize, p: &CoverParams) -> Option<BoundValue> {
        let (kind, s, t) = match self {
            Algorithm::Quadratic => (BoundKind::Quadratic, p.s, p.t),
            Algorithm::Threshold => (BoundKind::MainSt, p.s, p.t),
            Algorithm::Peel22 => (BoundKind::K22, 2, 2),
            Algorithm::Peel23 => (BoundKind::K23, 2, 3),
            Algorithm::PartitionProduct => (BoundKind::Ks1, p.s, 1),
        };
        bound_value(kind, n, s, t, 1.0).ok()
    }

    pub fn run(self, g: &Graph, p: &CoverParams) -> Result<AlgorithmOutput, AlgoError> {
        p.validate()?;
        Ok(match self {
            Algorithm::Quadratic => AlgorithmOutput {
                cover: quadratic_baseline_cover(g),
                trace: None,
                partition: None,
            },
            Algorithm::Threshold => {
                let (cover, trace) = greedy_threshold_cover(g, p);
                AlgorithmOutput {
                    cover,
                    trace: Some(trace),
                    partition: None,
                }
            }
            Algorithm::Peel22 | Algorithm::Peel23 => {
                let variant = if self == Algorithm::Peel22 {
                    PeelVariant::K22
                } else {
                    PeelVariant::K23
                };
                let (cover, trace) = mindeg_peeling_cover(g, variant, p);
                AlgorithmOutput {
                    cover,
                    trace: Some(trace),
                    partition: None,
                }
            }
            Algorithm::PartitionProduct => {
                let partition = clique_partition(g, p.s, p)?;
                let cover = partition_product_cover(g, &partition, true)?;
                AlgorithmOutput {
                    cover,
                    trace: None,
                    partition: Some(partition),
                }
            }
        })
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmOutput {
    pub cover: CliqueCover,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<CoverTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<CliquePartition>,
}
