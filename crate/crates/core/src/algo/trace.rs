use serde::{Deserialize, Serialize};

use crate::cover::{Clique, Provenance};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub phase: Provenance,
    pub clique: Clique,
    pub newly_covered: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trigger_vertex: Option<usize>,
    /// Uncovered degree of the trigger vertex when it was selected.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trigger_degree: Option<usize>,
    /// `i` with `|M|` in `[2^i √n', 2^{i+1} √n')`; absent below `4√n'`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_range: Option<u32>,
}

/// Per-step audit log of a constructive cover.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverTrace {
    pub steps: Vec<TraceStep>,
    /// False when a heuristic search may have missed a qualifying clique.
    pub exact_search: bool,
}

impl CoverTrace {
    pub(crate) fn new(exact_search: bool) -> Self {
        Self {
            steps: Vec::new(),
            exact_search,
        }
    }

    pub fn count(&self, phase: Provenance) -> usize {
        self.steps.iter().filter(|s| s.phase == phase).count()
    }
}
