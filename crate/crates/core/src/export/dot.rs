//! Graphviz renderings of state graphs, their reachable part, optimal
//! subgraphs and fiber lattices. Vertices with the boat on the left bank are
//! drawn filled black. Output depends only on the input, so it is stable
//! byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::Result;
use crate::model::{Puzzle, Side};
use crate::solver::{shortest_dag, FiberLattice, StateGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphScope {
    /// Every admissible state.
    Full,
    /// States reachable from the initial state.
    Component,
}

/// Strip the `:L` / `:R` suffix from a move, leaving the load.
fn load_label(mv: &impl std::fmt::Display) -> String {
    let s = mv.to_string();
    match s.rsplit_once(':') {
        Some((load, _)) => load.to_string(),
        None => s,
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn node_attrs(label: &str, boat: Side) -> String {
    let mut a = format!("label={}", quote(label));
    if boat == Side::Left {
        a.push_str(", style=filled, fillcolor=black, fontcolor=white");
    }
    a
}

/// Undirected rendering: each trip and its return are one edge, labelled by the load.
pub fn graph_dot<P: Puzzle>(graph: &StateGraph<P>, scope: GraphScope) -> String {
    let keep: Vec<usize> = match scope {
        GraphScope::Full => (0..graph.len()).collect(),
        GraphScope::Component => graph.reachable_indices(),
    };
    let kept: BTreeSet<usize> = keep.iter().copied().collect();
    let p = graph.puzzle();
    let mut out = String::new();
    let _ = writeln!(out, "graph {}_n{}_b{} {{", P::FLAVOR, p.n(), p.b());
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    for &i in &keep {
        let s = graph.vertex(i);
        let _ = writeln!(out, "  s{i} [{}];", node_attrs(&s.to_string(), p.boat_side(s)));
    }
    for (u, m, v) in graph.edges() {
        if u < v && kept.contains(&u) && kept.contains(&v) {
            let _ = writeln!(out, "  s{u} -- s{v} [label={}];", quote(&load_label(m)));
        }
    }
    out.push_str("}\n");
    out
}

/// Directed union of all shortest solutions, ranked by distance from the start.
pub fn optimal_subgraph_dot<P: Puzzle>(graph: &StateGraph<P>) -> Result<String> {
    let edges = shortest_dag(graph)?;
    let dist = graph.distances_from(graph.initial());
    let mut nodes: BTreeSet<usize> = edges.iter().flat_map(|(u, _, v)| [*u, *v]).collect();
    nodes.insert(graph.initial());
    let p = graph.puzzle();
    let mut out = String::new();
    let _ = writeln!(out, "digraph {}_n{}_b{}_optimal {{", P::FLAVOR, p.n(), p.b());
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    let depth = nodes.iter().filter_map(|&i| dist[i]).max().unwrap_or(0);
    for d in 0..=depth {
        let _ = write!(out, "  {{ rank=same;");
        for &i in nodes.iter().filter(|&&i| dist[i] == Some(d)) {
            let _ = write!(out, " s{i};");
        }
        out.push_str(" }\n");
    }
    for &i in &nodes {
        let s = graph.vertex(i);
        let _ = writeln!(out, "  s{i} [{}];", node_attrs(&s.to_string(), p.boat_side(s)));
    }
    for (u, m, v) in &edges {
        let _ = writeln!(out, "  s{u} -> s{v} [label={}];", quote(&load_label(m)));
    }
    out.push_str("}\n");
    Ok(out)
}

/// The fiber lattice, one rank per layer. Edges on `highlight` (a path of
/// lattice states, e.g. a lift) are drawn thicker.
pub fn fiber_dot(lattice: &FiberLattice, highlight: Option<&crate::solver::HwPath>) -> String {
    let on_path: BTreeSet<(usize, String, String)> = highlight
        .map(|p| {
            let states: Vec<String> = p.states().map(ToString::to_string).collect();
            states.windows(2).enumerate().map(|(j, w)| (j, w[0].clone(), w[1].clone())).collect()
        })
        .unwrap_or_default();
    let mut out = String::new();
    out.push_str("digraph fiber {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (j, layer) in lattice.layers.iter().enumerate() {
        let _ = write!(out, "  {{ rank=same;");
        for i in 0..layer.len() {
            let _ = write!(out, " l{j}_{i};");
        }
        out.push_str(" }\n");
        for (i, s) in layer.iter().enumerate() {
            let _ = writeln!(out, "  l{j}_{i} [{}];", node_attrs(&s.to_string(), s.boat()));
        }
    }
    for (j, edges) in lattice.edges.iter().enumerate() {
        for (u, m, v) in edges {
            let key = (j, lattice.layers[j][*u].to_string(), lattice.layers[j + 1][*v].to_string());
            let bold = if on_path.contains(&key) { ", penwidth=3" } else { "" };
            let _ = writeln!(out, "  l{j}_{u} -> l{}_{v} [label={}{bold}];", j + 1, quote(&load_label(m)));
        }
    }
    out.push_str("}\n");
    out
}
