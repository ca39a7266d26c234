//! Brute-force reference implementations used as test oracles. They share
//! no code with the library: states are raw bitmasks and counts, moves are
//! every subset of the boat's bank.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

/// Labelled state: wives and husbands on the left (bit i = couple i+1), boat on the left?
pub type Hw = (u32, u32, bool);
/// Counting state: cannibals and missionaries on the left, boat on the left?
pub type Mc = (usize, usize, bool);

pub const WORKED_MC_SOLUTION: [&str; 12] = [
    "[(3,3)|(0,0):L]",
    "[(1,3)|(2,0):R]",
    "[(2,3)|(1,0):L]",
    "[(0,3)|(3,0):R]",
    "[(1,3)|(2,0):L]",
    "[(1,1)|(2,2):R]",
    "[(2,2)|(1,1):L]",
    "[(2,0)|(1,3):R]",
    "[(3,0)|(0,3):L]",
    "[(1,0)|(2,3):R]",
    "[(2,0)|(1,3):L]",
    "[(0,0)|(3,3):R]",
];

pub const WORKED_HW_SOLUTION: [&str; 12] = [
    "[w1 w2 w3 h1 h2 h3 | : L]",
    "[w3 h1 h2 h3 | w1 w2 : R]",
    "[w2 w3 h1 h2 h3 | w1 : L]",
    "[h1 h2 h3 | w1 w2 w3 : R]",
    "[w1 h1 h2 h3 | w2 w3 : L]",
    "[w1 h1 | w2 w3 h2 h3 : R]",
    "[w1 w3 h1 h3 | w2 h2 : L]",
    "[w1 w3 | w2 h1 h2 h3 : R]",
    "[w1 w2 w3 | h1 h2 h3 : L]",
    "[w2 | w1 w3 h1 h2 h3 : R]",
    "[w1 w2 | w3 h1 h2 h3 : L]",
    "[| w1 w2 w3 h1 h2 h3 : R]",
];

fn full(n: usize) -> u32 {
    (1u32 << n) - 1
}

fn bank_safe(w: u32, h: u32) -> bool {
    h == 0 || w & !h == 0
}

pub fn hw_safe(n: usize, s: Hw) -> bool {
    let (w, h, _) = s;
    bank_safe(w, h) && bank_safe(full(n) & !w, full(n) & !h)
}

pub fn hw_successors(n: usize, b: usize, s: Hw) -> Vec<Hw> {
    let (w, h, left) = s;
    let (bw, bh) = if left { (w, h) } else { (full(n) & !w, full(n) & !h) };
    let mut out = Vec::new();
    for lw in 0..=full(n) {
        if lw & !bw != 0 {
            continue;
        }
        for lh in 0..=full(n) {
            if lh & !bh != 0 {
                continue;
            }
            let k = (lw.count_ones() + lh.count_ones()) as usize;
            if k == 0 || k > b {
                continue;
            }
            let t = if left { (w & !lw, h & !lh, false) } else { (w | lw, h | lh, true) };
            if hw_safe(n, t) {
                out.push(t);
            }
        }
    }
    out
}

pub fn hw_states(n: usize) -> Vec<Hw> {
    let mut v = Vec::new();
    for w in 0..=full(n) {
        for h in 0..=full(n) {
            for left in [true, false] {
                if hw_safe(n, (w, h, left)) {
                    v.push((w, h, left));
                }
            }
        }
    }
    v
}

pub fn mc_safe(n: usize, s: Mc) -> bool {
    let (c, m, _) = s;
    c <= n && m <= n && (m == 0 || c <= m) && (n - m == 0 || n - c <= n - m)
}

pub fn mc_successors(n: usize, b: usize, s: Mc) -> Vec<(Mc, (usize, usize))> {
    let (c, m, left) = s;
    let (bc, bm) = if left { (c, m) } else { (n - c, n - m) };
    let mut out = Vec::new();
    for lc in 0..=bc {
        for lm in 0..=bm {
            if lc + lm == 0 || lc + lm > b {
                continue;
            }
            let t = if left { (c - lc, m - lm, false) } else { (c + lc, m + lm, true) };
            if mc_safe(n, t) {
                out.push((t, (lc, lm)));
            }
        }
    }
    out
}

/// BFS from `start`: distance and number of shortest paths to every reached state.
pub fn bfs_count<S, F>(start: S, succ: F) -> HashMap<S, (usize, u128)>
where
    S: Copy + Eq + std::hash::Hash,
    F: Fn(S) -> Vec<S>,
{
    let mut seen: HashMap<S, (usize, u128)> = HashMap::new();
    seen.insert(start, (0, 1));
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let (du, cu) = seen[&u];
        for v in succ(u) {
            match seen.get_mut(&v) {
                None => {
                    seen.insert(v, (du + 1, cu));
                    queue.push_back(v);
                }
                Some((dv, cv)) if *dv == du + 1 => *cv += cu,
                _ => {}
            }
        }
    }
    seen
}

/// `(length, count)` of shortest labelled solutions, or `None` if infeasible.
pub fn hw_shortest(n: usize, b: usize) -> Option<(usize, u128)> {
    let start = (full(n), full(n), true);
    let seen = bfs_count(start, |s| hw_successors(n, b, s));
    seen.get(&(0, 0, false)).copied()
}

pub fn mc_shortest(n: usize, b: usize) -> Option<(usize, u128)> {
    let seen = bfs_count((n, n, true), |s| mc_successors(n, b, s).into_iter().map(|x| x.0).collect());
    seen.get(&(0, 0, false)).copied()
}

pub fn mc_component(n: usize, b: usize) -> usize {
    bfs_count((n, n, true), |s| mc_successors(n, b, s).into_iter().map(|x| x.0).collect()).len()
}

pub fn mc_state_count(n: usize) -> usize {
    let mut k = 0;
    for c in 0..=n {
        for m in 0..=n {
            for left in [true, false] {
                k += usize::from(mc_safe(n, (c, m, left)));
            }
        }
    }
    k
}

pub fn project(s: Hw) -> Mc {
    (s.0.count_ones() as usize, s.1.count_ones() as usize, s.2)
}

/// Labelled walks whose head counts follow `seq` step by step.
pub fn fiber_count(n: usize, b: usize, seq: &[Mc]) -> u128 {
    let mut ways: HashMap<Hw, u128> = HashMap::new();
    ways.insert((full(n), full(n), true), 1);
    for next in &seq[1..] {
        let mut nw: HashMap<Hw, u128> = HashMap::new();
        for (s, k) in &ways {
            for t in hw_successors(n, b, *s) {
                if project(t) == *next {
                    *nw.entry(t).or_default() += k;
                }
            }
        }
        ways = nw;
    }
    ways.values().sum()
}

/// Parse `[(c,m)|(c,m):L]`.
pub fn parse_mc(s: &str) -> Mc {
    let t: String = s.chars().filter(|c| !"[]() ".contains(*c)).collect();
    let (counts, side) = t.split_once(':').unwrap();
    let (l, _) = counts.split_once('|').unwrap();
    let (c, m) = l.split_once(',').unwrap();
    (c.parse().unwrap(), m.parse().unwrap(), side == "L")
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Labelled states over one counting state: pick the husbands, then the
/// wives are forced unless the bank has all husbands or none.
pub fn orbit_size(n: usize, s: Mc) -> usize {
    let (c, m, _) = s;
    if m == 0 || m == n {
        binomial(n, c)
    } else {
        binomial(n, m)
    }
}
