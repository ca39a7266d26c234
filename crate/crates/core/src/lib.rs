//! River-crossing puzzles in two flavors: labelled couples (jealous
//! husbands) and head counts (missionaries and cannibals), the relabelling
//! symmetry that turns one into the other, exact solution counting, and
//! bounded checks of the path categories built on their state graphs.

pub mod category;
pub mod cli;
pub mod error;
pub mod export;
pub mod model;
pub mod path;
pub mod solver;
pub mod symmetry;

pub use error::{Error, Result};
pub use model::{capacity, Flavor, HwMove, HwPuzzle, HwState, Limits, McMove, McPuzzle, McState, Puzzle, Side};
pub use path::Path;
pub use symmetry::Permutation;
