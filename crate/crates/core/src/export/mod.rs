//! Graphviz and JSON output.

pub mod dot;
pub mod json;

pub use dot::{fiber_dot, graph_dot, optimal_subgraph_dot, GraphScope};
pub use json::{parse_solution, SolutionsReport};
