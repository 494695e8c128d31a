//! Instance generators.

pub mod families;
pub mod interval;
pub mod knn;
pub mod minors;
pub mod npc;
pub mod twotree;

pub use interval::{gen_interval_layout, interval_graph, random_intervals};
pub use knn::{gen_knn_weights, grid_peel, knn_grid, knn_lower_bound, separated_sublayout, GridMatrix, GridPeel, SeparatedSub};
pub use minors::{forbidden_minor_uniform, gen_forbidden_minor};
pub use npc::{gen_npc_reduction, random_arc_instance, CircularArcInstance, ReductionOutput};
pub use twotree::{gen_hk, gen_left_growing_transform, weight_gap_epsilon, CopyInfo, HkCopy, HkInstance, RootedTwoTree};

use serde::Serialize;
use serde_json::Value;

/// Parameters and origin of a generated instance, written next to it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceRecipe {
    pub generator: String,
    pub params: Value,
    pub seed: Option<u64>,
    /// Free-form remarks on how the weights were chosen.
    pub notes: Vec<String>,
}

impl InstanceRecipe {
    pub fn new(generator: &str, params: Value) -> Self {
        InstanceRecipe { generator: generator.to_string(), params, seed: None, notes: Vec::new() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn note(mut self, text: &str) -> Self {
        self.notes.push(text.to_string());
        self
    }
}
