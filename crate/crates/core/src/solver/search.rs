use crate::error::{Error, Result};
use crate::model::Puzzle;
use crate::path::Path;

use super::graph::StateGraph;

pub type Solution<P> = Path<<P as Puzzle>::State, <P as Puzzle>::Move>;

/// Minimum solution length, the exact number of minimum-length solutions,
/// and up to `limit` of them in canonical order.
#[derive(Debug, Clone)]
pub struct ShortestSolutions<P: Puzzle> {
    pub length: usize,
    pub count: u128,
    pub solutions: Vec<Solution<P>>,
    pub truncated: bool,
}

/// Edges that lie on at least one shortest initial-to-goal path.
pub fn shortest_dag<P: Puzzle>(graph: &StateGraph<P>) -> Result<Vec<(usize, P::Move, usize)>> {
    let (from_init, to_goal, length) = layering(graph)?;
    let mut out = Vec::new();
    for (u, m, v) in graph.edges() {
        if let (Some(du), Some(dv), Some(gv)) = (from_init[u], from_init[v], to_goal[v]) {
            if du + 1 == dv && dv + gv == length {
                out.push((u, m.clone(), v));
            }
        }
    }
    Ok(out)
}

/// Distances from the start, distances to the goal, and the optimal length.
type Layering = (Vec<Option<usize>>, Vec<Option<usize>>, usize);

fn layering<P: Puzzle>(graph: &StateGraph<P>) -> Result<Layering> {
    let from_init = graph.distances_from(graph.initial());
    let length = from_init[graph.goal()].ok_or_else(|| Error::Infeasible {
        component: from_init.iter().filter(|d| d.is_some()).count(),
    })?;
    let to_goal = graph.distances_to(graph.goal());
    Ok((from_init, to_goal, length))
}

pub fn shortest_solutions<P: Puzzle>(graph: &StateGraph<P>, limit: usize) -> Result<ShortestSolutions<P>> {
    let (from_init, to_goal, length) = layering(graph)?;
    let on_dag = |u: usize, v: usize| match (from_init[u], from_init[v], to_goal[v]) {
        (Some(du), Some(dv), Some(gv)) => du + 1 == dv && dv + gv == length,
        _ => false,
    };

    // Count by layered DP over vertices in BFS order.
    let mut order: Vec<usize> = (0..graph.len()).filter(|&i| from_init[i].is_some()).collect();
    order.sort_by_key(|&i| from_init[i]);
    let mut ways = vec![0u128; graph.len()];
    ways[graph.initial()] = 1;
    for &u in &order {
        if ways[u] == 0 {
            continue;
        }
        for (_, v) in graph.out_edges(u) {
            if on_dag(u, *v) {
                ways[*v] = ways[*v].checked_add(ways[u]).ok_or(Error::BudgetExceeded {
                    what: "solution count overflows u128",
                    limit: usize::MAX,
                })?;
            }
        }
    }
    let count = ways[graph.goal()];

    let mut solutions = Vec::new();
    let mut truncated = false;
    let mut stack: Vec<(usize, usize)> = vec![(graph.initial(), 0)];
    let mut path = Path::identity(graph.vertex(graph.initial()).clone());
    while let Some((u, next)) = stack.last_mut() {
        let u = *u;
        if u == graph.goal() {
            if solutions.len() == limit {
                truncated = true;
                break;
            }
            solutions.push(path.clone());
            stack.pop();
            path.steps.pop();
            continue;
        }
        let out = graph.out_edges(u);
        match (*next..out.len()).find(|&k| on_dag(u, out[k].1)) {
            Some(k) => {
                *next = k + 1;
                let (m, v) = &out[k];
                path.push(m.clone(), graph.vertex(*v).clone());
                stack.push((*v, 0));
            }
            None => {
                stack.pop();
                path.steps.pop();
            }
        }
    }
    Ok(ShortestSolutions { length, count, solutions, truncated })
}

/// Depth-first stream of repetition-free solutions of length at most
/// `max_len`, in canonical order.
pub struct SolutionIter<'g, P: Puzzle> {
    graph: &'g StateGraph<P>,
    to_goal: Vec<Option<usize>>,
    max_len: usize,
    stack: Vec<(usize, usize)>,
    on_path: Vec<bool>,
    path: Solution<P>,
}

pub fn enumerate_solutions<P: Puzzle>(graph: &StateGraph<P>, max_len: usize) -> SolutionIter<'_, P> {
    let to_goal = graph.distances_to(graph.goal());
    let init = graph.initial();
    let mut on_path = vec![false; graph.len()];
    let stack = if to_goal[init].is_some_and(|d| d <= max_len) {
        on_path[init] = true;
        vec![(init, 0)]
    } else {
        Vec::new()
    };
    SolutionIter {
        graph,
        to_goal,
        max_len,
        stack,
        on_path,
        path: Path::identity(graph.vertex(init).clone()),
    }
}

impl<P: Puzzle> SolutionIter<'_, P> {
    fn retreat(&mut self) {
        if let Some((u, _)) = self.stack.pop() {
            self.on_path[u] = false;
            self.path.steps.pop();
        }
    }
}

impl<P: Puzzle> Iterator for SolutionIter<'_, P> {
    type Item = Solution<P>;

    fn next(&mut self) -> Option<Self::Item> {
        let goal = self.graph.goal();
        while let Some(&(u, next)) = self.stack.last() {
            if u == goal && next == 0 {
                // Mark as visited so the next call backtracks past it.
                self.stack.last_mut().unwrap().1 = usize::MAX;
                return Some(self.path.clone());
            }
            let depth = self.path.len();
            let out = self.graph.out_edges(u);
            let found = if u == goal {
                None
            } else {
                (next..out.len()).find(|&k| {
                    let v = out[k].1;
                    !self.on_path[v] && self.to_goal[v].is_some_and(|d| depth + 1 + d <= self.max_len)
                })
            };
            match found {
                Some(k) => {
                    self.stack.last_mut().unwrap().1 = k + 1;
                    let (m, v) = &out[k];
                    self.on_path[*v] = true;
                    self.path.push(m.clone(), self.graph.vertex(*v).clone());
                    self.stack.push((*v, 0));
                }
                None => self.retreat(),
            }
        }
        None
    }
}

/// Collect at most `budget` solutions; more than that is an error.
pub fn collect_solutions<P: Puzzle>(graph: &StateGraph<P>, max_len: usize, budget: usize) -> Result<Vec<Solution<P>>> {
    let mut out = Vec::new();
    for s in enumerate_solutions(graph, max_len) {
        if out.len() == budget {
            return Err(Error::BudgetExceeded { what: "solution enumeration", limit: budget });
        }
        out.push(s);
    }
    Ok(out)
}
