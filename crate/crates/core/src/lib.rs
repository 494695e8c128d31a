//! Priority-queue linear layouts of edge-weighted graphs.
//!
//! A layout orders the vertices on a line and splits the edges into pages.
//! Sweeping the line left to right, every page behaves as a priority queue
//! keyed by edge weight: an edge is inserted at its left endpoint and must be
//! the lightest queued edge of its page when it is pulled at its right
//! endpoint.

pub mod construct;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod layout;
pub mod ordering;
pub mod recognize;
pub mod render;
pub mod solve;
pub mod structures;
pub mod validate;
pub mod weight;

pub use error::{Error, Result};
pub use graph::{contract_edge, Contraction, Edge, EdgeId, Vertex, WeightedGraph};
pub use layout::Layout;
pub use ordering::VertexOrdering;
pub use weight::Weight;
