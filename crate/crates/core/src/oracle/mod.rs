//! Exact ground truth for small instances: clique and independence numbers,
//! induced `K_{s,t}` detection, minimum edge clique covers, and certified
//! Ramsey-type witnesses.

mod clique;
mod ecc;
mod kst;
mod ramsey;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use clique::{
    clique_number, degeneracy_order, independence_number, max_clique_exact, max_clique_within,
    max_coverage_clique, max_stable_exact, maximal_cliques,
};
pub use ecc::{min_ecc_exact, min_ecc_size, DEFAULT_BUDGET};
pub use kst::{contains_induced_kst, KstWitness};
pub use ramsey::{ramsey_search, RamseyError, RamseyWitness};

use crate::cover::Clique;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSets {
    pub max_clique: Vec<usize>,
    pub max_stable: Vec<usize>,
    pub min_cover: Option<Vec<Clique>>,
}

/// Exportable oracle results for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub alpha: usize,
    pub omega: usize,
    /// `None` when the cover search ran out of budget.
    pub min_ecc: Option<usize>,
    pub witness_sets: WitnessSets,
}

pub fn summarize(g: &Graph, budget: u64) -> OracleSummary {
    let max_clique = max_clique_exact(g);
    let max_stable = max_stable_exact(g);
    let min_cover = min_ecc_exact(g, budget).ok();
    OracleSummary {
        alpha: max_stable.len(),
        omega: max_clique.len(),
        min_ecc: min_cover.as_ref().map(|c| c.size()),
        witness_sets: WitnessSets {
            max_clique,
            max_stable,
            min_cover: min_cover.map(|c| c.cliques),
        },
    }
}
