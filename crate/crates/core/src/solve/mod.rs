//! Exact page minimization.
//!
//! * [`solve_fixed_order`]: chromatic number of the conflict graph.
//! * [`solve_free_order`]: minimum over all vertex orderings.
//! * [`universal_pqn1_oracle`]: does every weighting admit one page?
//! * [`solve_separated`]: bipartite graphs with one part before the other.

mod coloring;
mod fixed;
mod free;
mod separated;
mod universal;

pub use coloring::{dsatur_greedy, exact_coloring, Coloring};
pub use fixed::{solve_fixed_order, solve_fixed_order_with};
pub use free::{solve_free_order, solve_free_order_with, weighted_automorphism_orbits};
pub use separated::{larger_part_first_layout, solve_separated, solve_separated_with, Side};
pub use universal::{universal_pqn1_oracle, universal_pqn1_oracle_with, UniversalVerdict};

use serde::Serialize;
use serde_json::{json, Value};

use crate::graph::EdgeId;
use crate::io::layout_to_value;
use crate::layout::Layout;

/// Search limits. All of them are explicit: a solver that hits one reports
/// a budget result instead of truncating silently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveConfig {
    /// Branch-and-bound nodes per coloring or per ordering search.
    pub node_budget: u64,
    /// Largest vertex count for the free-order search.
    pub free_max_n: usize,
    /// Largest edge count enumerated directly by the universal oracle.
    pub universal_max_m: usize,
    /// Worker cap for the free-order search; `None` uses all cores.
    pub threads: Option<usize>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            node_budget: 50_000_000,
            free_max_n: 10,
            universal_max_m: 8,
            threads: None,
        }
    }
}

/// Why a lower bound holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LowerBoundCertificate {
    /// Pairwise conflicting edges under the witness ordering.
    Inversion { edges: Vec<EdgeId> },
    /// Pairwise conflicting edges found by a clique search.
    Clique { edges: Vec<EdgeId> },
    /// Every ordering in scope was refuted with fewer pages.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    /// Best page count found; the minimum when `optimal`.
    pub k: usize,
    pub witness: Layout,
    /// Proven lower bound; equals `k` when `optimal`.
    pub lower: usize,
    pub optimal: bool,
    /// Largest clique found in the conflict graph of the witness ordering.
    pub clique: usize,
    pub lower_bound_certificate: Option<LowerBoundCertificate>,
    /// Search nodes spent.
    pub nodes: u64,
}

impl SolveResult {
    pub fn budget_exceeded(&self) -> bool {
        !self.optimal
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "optimal": self.optimal,
            "lower_bound": self.lower,
            "clique": self.clique,
            "lower_bound_certificate": self.lower_bound_certificate,
            "nodes": self.nodes,
            "witness": layout_to_value(&self.witness),
        })
    }
}
