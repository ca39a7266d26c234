use std::collections::{HashMap, VecDeque};

use crate::model::Puzzle;

/// The full admissible state graph of an instance. Vertices are sorted and
/// each adjacency list follows `Puzzle::successors` order.
#[derive(Debug, Clone)]
pub struct StateGraph<P: Puzzle> {
    puzzle: P,
    vertices: Vec<P::State>,
    index: HashMap<P::State, usize>,
    adjacency: Vec<Vec<(P::Move, usize)>>,
}

impl<P: Puzzle> StateGraph<P> {
    pub fn build(puzzle: P) -> Self {
        let vertices = puzzle.states();
        let index: HashMap<P::State, usize> =
            vertices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let adjacency = vertices
            .iter()
            .map(|s| {
                puzzle
                    .successors(s)
                    .into_iter()
                    .map(|(m, t)| (m, index[&t]))
                    .collect()
            })
            .collect();
        StateGraph { puzzle, vertices, index, adjacency }
    }

    pub fn puzzle(&self) -> &P {
        &self.puzzle
    }

    pub fn vertices(&self) -> &[P::State] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &P::State {
        &self.vertices[i]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, s: &P::State) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn initial(&self) -> usize {
        self.index[&self.puzzle.initial()]
    }

    pub fn goal(&self) -> usize {
        self.index[&self.puzzle.goal()]
    }

    pub fn out_edges(&self, i: usize) -> &[(P::Move, usize)] {
        &self.adjacency[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Every directed edge `(from, move, to)` in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, &P::Move, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |(m, v)| (u, m, *v)))
    }

    /// Predecessor lists (reverse adjacency).
    pub fn reverse_adjacency(&self) -> Vec<Vec<(P::Move, usize)>> {
        let mut rev = vec![Vec::new(); self.len()];
        for (u, m, v) in self.edges() {
            rev[v].push((m.clone(), u));
        }
        rev
    }

    /// BFS hop counts from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        bfs(self.len(), src, |u| self.adjacency[u].iter().map(|(_, v)| *v))
    }

    /// BFS hop counts to `dst` along edge direction.
    pub fn distances_to(&self, dst: usize) -> Vec<Option<usize>> {
        let rev = self.reverse_adjacency();
        bfs(self.len(), dst, |u| rev[u].iter().map(|(_, v)| *v).collect::<Vec<_>>())
    }

    /// Vertex indices reachable from the initial state, sorted.
    pub fn reachable_indices(&self) -> Vec<usize> {
        self.distances_from(self.initial())
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|_| i))
            .collect()
    }

    /// States reachable from the initial state, sorted.
    pub fn reachable_component(&self) -> Vec<P::State> {
        self.reachable_indices().into_iter().map(|i| self.vertices[i].clone()).collect()
    }

    pub fn is_feasible(&self) -> bool {
        self.distances_from(self.initial())[self.goal()].is_some()
    }

    /// Vertices with no outgoing edge.
    pub fn isolated(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.adjacency[i].is_empty()).collect()
    }
}

fn bfs<I: IntoIterator<Item = usize>>(len: usize, src: usize, next: impl Fn(usize) -> I) -> Vec<Option<usize>> {
    let mut dist = vec![None; len];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for v in next(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}
