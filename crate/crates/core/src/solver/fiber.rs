use crate::error::{Error, Result};
use crate::model::{HwMove, HwPuzzle, HwState, Limits, McPuzzle, Puzzle};
use crate::path::{validate_solution, Path};
use crate::symmetry::{orbit, project_move, section};

use super::lift::{HwPath, McPath};

/// All labelled solutions over one counting solution, as a layered graph.
/// Layer `j` is the orbit over the `j`-th counting state; edges are legal
/// labelled trips between consecutive layers whose load projects onto the
/// counting move.
#[derive(Debug, Clone)]
pub struct FiberLattice {
    pub layers: Vec<Vec<HwState>>,
    /// `edges[j]` joins layer `j` to layer `j + 1`: `(from index, move, to index)`.
    pub edges: Vec<Vec<(usize, HwMove, usize)>>,
    pub count: u128,
}

impl FiberLattice {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Is `path` one of the lattice's initial-to-goal paths?
    pub fn contains(&self, path: &HwPath) -> bool {
        if path.len() + 1 != self.layers.len() {
            return false;
        }
        let idx: Option<Vec<usize>> = path
            .states()
            .zip(&self.layers)
            .map(|(s, layer)| layer.binary_search(s).ok())
            .collect();
        let Some(idx) = idx else { return false };
        path.moves().enumerate().all(|(j, m)| {
            self.edges[j].iter().any(|(u, mv, v)| *u == idx[j] && mv == m && *v == idx[j + 1])
        })
    }

    /// Depth-first listing of up to `limit` lifts in canonical order.
    pub fn solutions(&self, limit: usize) -> Vec<HwPath> {
        let k = self.edges.len();
        let mut out = Vec::new();
        if self.layers.is_empty() {
            return out;
        }
        let mut path = Path::identity(self.layers[0][0]);
        fn walk(lat: &FiberLattice, j: usize, at: usize, k: usize, path: &mut HwPath, out: &mut Vec<HwPath>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            if j == k {
                out.push(path.clone());
                return;
            }
            for (u, m, v) in &lat.edges[j] {
                if *u == at {
                    path.push(*m, lat.layers[j + 1][*v]);
                    walk(lat, j + 1, *v, k, path, out, limit);
                    path.steps.pop();
                }
            }
        }
        walk(self, 0, 0, k, &mut path, &mut out, limit);
        out
    }
}

pub fn enumerate_lifts(mc: &McPuzzle, solution: &McPath) -> Result<FiberLattice> {
    validate_solution(mc, solution)?;
    let hw = HwPuzzle::new(mc.n(), mc.b(), &Limits { max_n: mc.n() })?;
    let layers: Vec<Vec<HwState>> = solution.states().map(|s| orbit(&section(s)).members).collect();
    let mut edges = Vec::with_capacity(solution.len());
    for (j, (mv, _)) in solution.steps.iter().enumerate() {
        let mut layer_edges = Vec::new();
        for (u, su) in layers[j].iter().enumerate() {
            for (v, sv) in layers[j + 1].iter().enumerate() {
                if let Some(m) = hw.move_between(su, sv) {
                    if project_move(&m) == *mv {
                        layer_edges.push((u, m, v));
                    }
                }
            }
        }
        edges.push(layer_edges);
    }

    let mut ways = vec![1u128; layers[0].len()];
    for (j, layer_edges) in edges.iter().enumerate() {
        let mut next = vec![0u128; layers[j + 1].len()];
        for (u, _, v) in layer_edges {
            next[*v] = next[*v].checked_add(ways[*u]).ok_or(Error::BudgetExceeded {
                what: "fiber count overflows u128",
                limit: usize::MAX,
            })?;
        }
        ways = next;
    }
    let count = ways.iter().sum();
    Ok(FiberLattice { layers, edges, count })
}
