//! Exact solvers for Not-All-Equal and 1-in-Degree vertex decompositions,
//! zero-sum edge and vertex flows, NAE / 1-in-Degree edge colorings, and
//! generators for the reduction gadgets that tie them to SAT variants and
//! 3-Partition.

pub mod decomp;
pub mod edge_color;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod graph;
pub mod lp;
pub mod reductions;
pub mod sat;
pub mod stats;

pub use decomp::Decomposition;
pub use error::{Error, Result};
pub use graph::{Graph, VertexWeightedGraph};
pub use sat::{Assignment, PositiveFormula, TreeLikeInstance};
pub use stats::SolveStats;
