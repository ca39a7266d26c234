//! State graphs, feasibility, exact counting, projection and lifting of solutions.

pub mod fiber;
pub mod graph;
pub mod lift;
pub mod search;

pub use fiber::{enumerate_lifts, FiberLattice};
pub use graph::StateGraph;
pub use lift::{
    lift_path, lift_path_lazy, lift_permutations_in_rotation_subgroup, lift_solution, sorting_permutation, HwPath,
    LiftTrace, McPath,
};
pub use search::{
    collect_solutions, enumerate_solutions, shortest_dag, shortest_solutions, ShortestSolutions, Solution, SolutionIter,
};

use crate::error::Result;
use crate::model::{Flavor, HwPuzzle, Limits, McPuzzle};

/// Whether the goal is reachable. Both flavors agree by the orbit
/// correspondence; this builds the requested one.
pub fn is_feasible(n: usize, b: usize, flavor: Flavor, limits: &Limits) -> Result<bool> {
    Ok(match flavor {
        Flavor::Hw => StateGraph::build(HwPuzzle::new(n, b, limits)?).is_feasible(),
        Flavor::Mc => StateGraph::build(McPuzzle::new(n, b, limits)?).is_feasible(),
    })
}

/// Map a labelled solution to head counts.
pub fn project_solution(solution: &HwPath) -> McPath {
    crate::symmetry::project_path(solution)
}
