//! Acceptance suite: one line per criterion, each run against its time
//! limit. Runs without the libtest harness so the report reads top to
//! bottom; exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rivercross::cli::{catcheck_report, CatcheckConfig};
use rivercross::export::{fiber_dot, graph_dot, GraphScope};
use rivercross::model::{HwState, McState};
use rivercross::path::path_from_states;
use rivercross::solver::{enumerate_lifts, lift_solution, project_solution, shortest_solutions, McPath, StateGraph};
use rivercross::symmetry::{canonical, orbit, project, section};
use rivercross::{capacity, HwPuzzle, Limits, McPuzzle, Permutation, Puzzle};

use common::*;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mc(n: usize, b: usize) -> McPuzzle {
    McPuzzle::new(n, b, &Limits::default()).unwrap()
}

fn hw(n: usize, b: usize) -> HwPuzzle {
    HwPuzzle::new(n, b, &Limits::default()).unwrap()
}

fn worked_mc_path() -> McPath {
    let states: Vec<McState> = WORKED_MC_SOLUTION.iter().map(|s| s.parse().unwrap()).collect();
    path_from_states(&mc(3, 2), &states).unwrap()
}

fn c1_capacity() -> Result<String, String> {
    for n in 2..=10 {
        let expected = if n <= 3 { 2 } else if n <= 5 { 3 } else { 4 };
        let got = capacity(n).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("capacity({n}) = {got}, expected {expected}"))?;
    }
    ensure(capacity(1).is_err(), || "capacity(1) should be an error".into())?;
    Ok("capacity(n) for n=2..10 is 2,2,3,3,4,4,4,4,4".into())
}

fn c2_mc3() -> Result<String, String> {
    let found = shortest_solutions(&StateGraph::build(mc(3, 2)), 10).map_err(|e| e.to_string())?;
    ensure(found.length == 11 && found.count == 4, || format!("got length={} count={}", found.length, found.count))?;
    let oracle = mc_shortest(3, 2);
    ensure(oracle == Some((11, 4)), || format!("oracle disagrees: {oracle:?}"))?;
    Ok("MC n=3 b=2: length=11 count=4".into())
}

fn c3_hw3() -> Result<String, String> {
    let found = shortest_solutions(&StateGraph::build(hw(3, 2)), 0).map_err(|e| e.to_string())?;
    ensure(found.count == 486, || format!("got count={}", found.count))?;
    let oracle = hw_shortest(3, 2);
    ensure(oracle == Some((found.length, 486)), || format!("oracle disagrees: {oracle:?}"))?;
    Ok(format!("HW n=3 b=2: length={} count=486", found.length))
}

fn c4_fiber() -> Result<String, String> {
    let lattice = enumerate_lifts(&mc(3, 2), &worked_mc_path()).map_err(|e| e.to_string())?;
    ensure(lattice.count == 216, || format!("fiber count {}", lattice.count))?;
    let seq: Vec<Mc> = WORKED_MC_SOLUTION.iter().map(|s| parse_mc(s)).collect();
    let oracle = fiber_count(3, 2, &seq);
    ensure(oracle == 216, || format!("oracle fiber count {oracle}"))?;
    Ok("fiber of the worked MC solution = 216".into())
}

fn c5_infeasible() -> Result<String, String> {
    let mut sizes = Vec::new();
    for (n, b) in [(4, 2), (5, 2), (6, 3), (7, 3)] {
        let start = Instant::now();
        let g = StateGraph::build(mc(n, b));
        let comp = g.reachable_indices().len();
        ensure(!g.is_feasible(), || format!("({n},{b}) should be infeasible"))?;
        ensure(comp == 2 * (n + b) - 1, || format!("({n},{b}) component {comp}"))?;
        ensure(mc_component(n, b) == comp && mc_shortest(n, b).is_none(), || format!("({n},{b}) oracle disagrees"))?;
        let hw_g = StateGraph::build(hw(n, b));
        ensure(!hw_g.is_feasible(), || format!("HW ({n},{b}) should be infeasible"))?;
        ensure(start.elapsed() < Duration::from_secs(1), || format!("({n},{b}) took {:?}", start.elapsed()))?;
        sizes.push(comp.to_string());
    }
    Ok(format!("(4,2),(5,2),(6,3),(7,3) unreachable; components {}", sizes.join(",")))
}

fn c6_feasible() -> Result<String, String> {
    let mut parts = Vec::new();
    for (n, b) in [(4, 3), (5, 3), (6, 4)] {
        let m = shortest_solutions(&StateGraph::build(mc(n, b)), 0).map_err(|e| format!("MC ({n},{b}): {e}"))?;
        let h = shortest_solutions(&StateGraph::build(hw(n, b)), 0).map_err(|e| format!("HW ({n},{b}): {e}"))?;
        ensure(m.count > 0 && h.count > 0, || format!("({n},{b}) has no solutions"))?;
        ensure(m.length == h.length, || format!("({n},{b}) lengths differ: {} vs {}", m.length, h.length))?;
        ensure(mc_shortest(n, b) == Some((m.length, m.count)), || format!("({n},{b}) MC oracle disagrees"))?;
        parts.push(format!("({n},{b}) length={} mc={} hw={}", m.length, m.count, h.count));
    }
    Ok(parts.join("; "))
}

fn c7_bijection() -> Result<String, String> {
    for n in 2..=5 {
        let b = capacity(n).unwrap();
        let mc_states = mc(n, b).states();
        for s in &mc_states {
            ensure(project(&section(s)) == *s, || format!("project(section({s})) != {s}"))?;
        }
        let orbits: BTreeSet<HwState> = hw(n, b).states().iter().map(canonical).collect();
        ensure(orbits.len() == mc_states.len(), || format!("n={n}: {} orbits vs {} MC states", orbits.len(), mc_states.len()))?;
        ensure(mc_states.len() == mc_state_count(n) && mc_states.len() == 2 * (3 * n + 1), || format!("n={n}: MC count"))?;
        let hw_total: usize = orbits.iter().map(|o| orbit(o).len()).sum();
        ensure(hw_total == hw_states(n).len(), || format!("n={n}: orbits do not partition the HW states"))?;
    }
    Ok("project∘section = id and #orbits = #MC states for n=2..5".into())
}

fn c8_lifting() -> Result<String, String> {
    let mut total = 0;
    for n in 2..=5 {
        let puzzle = mc(n, capacity(n).unwrap());
        let found = shortest_solutions(&StateGraph::build(puzzle), usize::MAX).map_err(|e| e.to_string())?;
        ensure(found.solutions.len() as u128 == found.count, || format!("n={n}: listing truncated"))?;
        for s in &found.solutions {
            let trace = lift_solution(&puzzle, s).map_err(|e| format!("n={n}: {e}"))?;
            ensure(project_solution(&trace.path) == *s, || format!("n={n}: projection of lift differs for {s}"))?;
            ensure(trace.uses_only_rotations(), || format!("n={n}: non-rotation relabelling lifting {s}"))?;
        }
        total += found.solutions.len();
    }
    Ok(format!("{total} optimal MC solutions (n=2..5) lift, project back, and use rotations only"))
}

fn action_checks(n: usize, perms: &[(Permutation, Permutation)], states: &[HwState], puzzle: &HwPuzzle) -> Result<usize, String> {
    let mut cases = 0;
    for (pi, sigma) in perms {
        for s in states {
            let both = pi.compose(sigma).act_on_state(s);
            ensure(both == pi.act_on_state(&sigma.act_on_state(s)), || format!("(πσ)·s != π·(σ·s) at {s}"))?;
            ensure(Permutation::identity(n).act_on_state(s) == *s, || format!("e·s != s at {s}"))?;
            ensure(project(&pi.act_on_state(s)) == project(s), || format!("projection not invariant at {s}"))?;
            let moved = pi.act_on_state(s);
            let mut expect: Vec<_> = puzzle.successors(s).iter().map(|(m, t)| (pi.act_on_move(m), pi.act_on_state(t))).collect();
            expect.sort();
            let mut got = puzzle.successors(&moved);
            got.sort();
            ensure(got == expect, || format!("successors not equivariant at {s} under {pi}"))?;
            for (m, _) in puzzle.successors(s) {
                let c1 = puzzle.classify(s, &m).map_err(|e| e.to_string())?;
                let c2 = puzzle.classify(&moved, &pi.act_on_move(&m)).map_err(|e| e.to_string())?;
                ensure(c1 == c2, || format!("case of {m} at {s} changes under {pi}"))?;
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn c9_group_action() -> Result<String, String> {
    let p3 = hw(3, 2);
    let all = Permutation::all(3);
    let pairs: Vec<_> = all.iter().flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone()))).collect();
    let exhaustive = action_checks(3, &pairs, &p3.states(), &p3)?;

    let p5 = hw(5, 3);
    let states = p5.states();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let random_perm = |rng: &mut ChaCha8Rng| {
        let mut v: Vec<usize> = (1..=5).collect();
        v.shuffle(rng);
        Permutation::from_images(&v).unwrap()
    };
    let mut sampled = 0;
    for _ in 0..10_000 {
        let pair = [(random_perm(&mut rng), random_perm(&mut rng))];
        let s = states[rng.gen_range(0..states.len())];
        sampled += action_checks(5, &pair, &[s], &p5)?;
    }
    ensure(sampled >= 10_000, || format!("only {sampled} random cases"))?;
    Ok(format!("{exhaustive} exhaustive cases at n=3, {sampled} seeded random cases at n=5"))
}

fn c10_categories() -> Result<String, String> {
    let cfg = CatcheckConfig::new(3, 2, 6);
    let (report, laws) = catcheck_report(&cfg, &Limits::default()).map_err(|e| e.to_string())?;
    for l in &laws {
        ensure(l.holds() && l.checked > 0, || format!("{} failed: {:?}", l.law, l.first_failure))?;
    }
    ensure(report.full && report.faithful && report.essentially_surjective, || format!("{report:?}"))?;
    let checked: usize = laws.iter().map(|l| l.checked).sum();
    Ok(format!("n=3 b=2 L=6: full, faithful, essentially surjective; {} law groups, {checked} cases", laws.len()))
}

fn c11_cross_count() -> Result<String, String> {
    let puzzle = mc(3, 2);
    let found = shortest_solutions(&StateGraph::build(puzzle), 10).map_err(|e| e.to_string())?;
    ensure(found.solutions.len() == 4, || "expected 4 optimal MC solutions".into())?;
    let mut sum = 0u128;
    for s in &found.solutions {
        sum += enumerate_lifts(&puzzle, s).map_err(|e| e.to_string())?.count;
    }
    let hw_count = shortest_solutions(&StateGraph::build(hw(3, 2)), 0).map_err(|e| e.to_string())?.count;
    ensure(sum == 486 && hw_count == 486, || format!("fiber sum {sum}, HW count {hw_count}"))?;
    Ok("sum of fibers over the 4 optimal MC solutions = 486 = HW optimal count".into())
}

/// Node labels and `(endpoints, load)` edges of an undirected DOT graph.
type DotEdge = (BTreeSet<String>, String);

fn parse_dot(dot: &str) -> (BTreeMap<String, String>, Vec<DotEdge>) {
    let mut nodes = BTreeMap::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        let Some((head, attrs)) = line.split_once(" [label=\"") else { continue };
        let label = attrs.split('"').next().unwrap().to_string();
        if let Some((u, v)) = head.split_once(" -- ") {
            edges.push((BTreeSet::from([u.to_string(), v.to_string()]), label));
        } else {
            nodes.insert(head.to_string(), label);
        }
    }
    let named = edges
        .into_iter()
        .map(|(ends, load)| (ends.iter().map(|e| nodes[e].clone()).collect(), load))
        .collect();
    (nodes, named)
}

fn mc_text(s: Mc, n: usize) -> String {
    let (c, m, left) = s;
    format!("[({c},{m})|({},{}):{}]", n - c, n - m, if left { "L" } else { "R" })
}

fn c12_dot_reproduction() -> Result<String, String> {
    let (n, b) = (4, 2);
    let g = StateGraph::build(mc(n, b));
    let (nodes, edges) = parse_dot(&graph_dot(&g, GraphScope::Component));
    ensure(nodes.len() == 11, || format!("{} vertices", nodes.len()))?;

    // the reachable states listed for this family, plus the initial state
    let mut expect_states: Vec<Mc> = vec![(n, n, true), (0, n, false), (n - b, n - b, false)];
    for p in 1..b {
        expect_states.extend([(n - p, n - p, true), (n - p, n - p, false)]);
    }
    for q in 1..n {
        expect_states.extend([(n - q, n, true), (n - q, n, false)]);
    }
    let expect_labels: BTreeSet<String> = expect_states.iter().map(|s| mc_text(*s, n)).collect();
    let got_labels: BTreeSet<String> = nodes.values().cloned().collect();
    ensure(got_labels == expect_labels, || format!("vertex set differs: {got_labels:?}"))?;

    let mut expect_edges = Vec::new();
    for s in &expect_states {
        for (t, (lc, lm)) in mc_successors(n, b, *s) {
            if s.2 {
                // each undirected edge once, from its boat-on-left end
                expect_edges.push((BTreeSet::from([mc_text(*s, n), mc_text(t, n)]), format!("({lc},{lm})")));
            }
        }
    }
    let mut got_edges = edges;
    got_edges.sort();
    expect_edges.sort();
    ensure(got_edges == expect_edges, || format!("edge multiset differs: {got_edges:?} vs {expect_edges:?}"))?;

    let lattice = enumerate_lifts(&mc(3, 2), &worked_mc_path()).map_err(|e| e.to_string())?;
    let trace = lift_solution(&mc(3, 2), &worked_mc_path()).map_err(|e| e.to_string())?;
    let dot = fiber_dot(&lattice, Some(&trace.path));
    let ranks: Vec<usize> = dot
        .lines()
        .filter(|l| l.contains("rank=same"))
        .map(|l| l.matches(';').count() - 1)
        .collect();
    let expect_sizes: Vec<usize> = WORKED_MC_SOLUTION.iter().map(|s| orbit_size(3, parse_mc(s))).collect();
    ensure(ranks.len() == 12, || format!("{} layers", ranks.len()))?;
    ensure(ranks == expect_sizes, || format!("layer sizes {ranks:?} vs {expect_sizes:?}"))?;
    let bold = dot.lines().filter(|l| l.contains("penwidth")).count();
    ensure(bold == 11, || format!("{bold} highlighted edges"))?;
    Ok(format!("component DOT: 11 vertices, {} edges match; fiber DOT layers {ranks:?}", expect_edges.len()))
}

fn main() {
    let criteria: [(u32, &str, Check, u64); 12] = [
        (1, "capacity formula", c1_capacity, 1),
        (2, "MC n=3 optimal length and count", c2_mc3, 1),
        (3, "HW n=3 optimal count", c3_hw3, 10),
        (4, "fiber of the worked solution", c4_fiber, 5),
        (5, "infeasibility and component sizes", c5_infeasible, 4),
        (6, "feasibility at (4,3), (5,3), (6,4)", c6_feasible, 30),
        (7, "orbit bijection n=2..5", c7_bijection, 5),
        (8, "lifting soundness n=2..5", c8_lifting, 30),
        (9, "group action laws and equivariance", c9_group_action, 10),
        (10, "category checks n=3 L=6", c10_categories, 60),
        (11, "fiber sum equals HW count", c11_cross_count, 30),
        (12, "DOT reproduction", c12_dot_reproduction, 30),
    ];
    let mut failed = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= Duration::from_secs(limit) {
                Ok(detail)
            } else {
                Err(format!("took {:.2}s, limit {limit}s", elapsed.as_secs_f64()))
            }
        });
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        println!("criterion {id:>2} {tag}  {name} [{:.3}s / {limit}s]: {detail}", elapsed.as_secs_f64());
        failed += usize::from(result.is_err());
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
