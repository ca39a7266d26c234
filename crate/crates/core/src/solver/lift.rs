//! Lifting a counting-flavor path to a labelled one.
//!
//! Before each trip the partial lift is relabelled so that the departure
//! bank's wives carry the lowest indices (in increasing order), followed by
//! the remaining wives. The trip is then taken from fixed index blocks chosen
//! by the transition case, which keeps every lifted state on the canonical
//! `section` of its counting state up to the relabelling.

use crate::error::{Error, Result};
use crate::model::{CaseKind, HwMove, HwPuzzle, HwState, Limits, McMove, McPuzzle, McState, Puzzle, PersonSet, Side};
use crate::path::{validate_path, validate_solution, Path};
use crate::symmetry::{project, project_move, section, Permutation};

pub type HwPath = Path<HwState, HwMove>;
pub type McPath = Path<McState, McMove>;

/// A lifted path plus the relabelling applied before each trip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftTrace {
    pub path: HwPath,
    pub permutations: Vec<Permutation>,
}

impl LiftTrace {
    /// Every relabelling used is a block rotation.
    pub fn uses_only_rotations(&self) -> bool {
        lift_permutations_in_rotation_subgroup(self)
    }
}

pub fn lift_permutations_in_rotation_subgroup(trace: &LiftTrace) -> bool {
    trace.permutations.iter().all(Permutation::is_rotation)
}

/// Relabelling that sends the wives on `side` to `1..x` and the others to
/// `x+1..n`, each group in increasing order.
pub fn sorting_permutation(state: &HwState, side: Side) -> Permutation {
    let n = state.n();
    let here = state.bank(side).wives_mask();
    let listing: Vec<usize> = (1..=n)
        .filter(|i| here & (1 << (i - 1)) != 0)
        .chain((1..=n).filter(|i| here & (1 << (i - 1)) == 0))
        .collect();
    Permutation::from_images(&listing)
        .expect("listing covers 1..n once")
        .inverse()
}

/// Load for a trip of `mv` from a sorted state whose departure bank holds `x` wives.
fn block_load(kind: CaseKind, n: usize, x: usize, mv: &McMove) -> PersonSet {
    let c = mv.load.cannibals;
    let wives = (x + 1 - c, x);
    let none = (1, 0);
    match kind {
        CaseKind::I | CaseKind::II => PersonSet::blocks(wives, none),
        CaseKind::III => PersonSet::blocks(wives, (1, n)),
        CaseKind::IV => PersonSet::blocks(wives, (x + 1 - c, n)),
        CaseKind::V => PersonSet::blocks(wives, (1, x)),
        CaseKind::VI => PersonSet::blocks(wives, (x + 1 - c, x)),
    }
}

fn hw_twin(mc: &McPuzzle) -> Result<HwPuzzle> {
    HwPuzzle::new(mc.n(), mc.b(), &Limits { max_n: mc.n() })
}

fn lift_step(
    mc: &McPuzzle,
    hw: &HwPuzzle,
    step: usize,
    cur: &HwState,
    from: &McState,
    mv: &McMove,
    to: &McState,
) -> Result<(HwMove, HwState)> {
    let kind = mc.classify(from, mv)?.kind;
    let x = cur.bank(mv.from).wife_count();
    let load = block_load(kind, mc.n(), x, mv);
    let hw_move = HwMove { load, from: mv.from };
    let next = cur.apply(load);
    if !hw.is_valid_move(cur, &hw_move) || !next.is_admissible() || project(&next) != *to {
        return Err(Error::InvalidStep {
            step,
            reason: format!("lifted trip {hw_move} from {cur} does not realise {mv}"),
        });
    }
    debug_assert_eq!(project_move(&hw_move), *mv);
    Ok((hw_move, next))
}

/// Lift an arbitrary legal counting path, starting from the canonical
/// labelled state over its first state. The whole partial lift is
/// relabelled before every trip.
pub fn lift_path(mc: &McPuzzle, path: &McPath) -> Result<LiftTrace> {
    validate_path(mc, path)?;
    let hw = hw_twin(mc)?;
    let mut out: HwPath = Path::identity(section(&path.start));
    let mut permutations = Vec::with_capacity(path.len());
    let mut from = &path.start;
    for (i, (mv, to)) in path.steps.iter().enumerate() {
        let pi = sorting_permutation(out.end(), mv.from);
        out = pi.act_on_path(&out);
        permutations.push(pi);
        let (m, next) = lift_step(mc, &hw, i + 1, out.end(), from, mv, to)?;
        out.push(m, next);
        from = to;
    }
    Ok(LiftTrace { path: out, permutations })
}

/// Same construction, but keeps the partial lift in its original labels and
/// relabels once at the end with the accumulated permutation.
pub fn lift_path_lazy(mc: &McPuzzle, path: &McPath) -> Result<LiftTrace> {
    validate_path(mc, path)?;
    let hw = hw_twin(mc)?;
    let n = mc.n();
    let mut raw: HwPath = Path::identity(section(&path.start));
    let mut total = Permutation::identity(n);
    let mut permutations = Vec::with_capacity(path.len());
    let mut from = &path.start;
    for (i, (mv, to)) in path.steps.iter().enumerate() {
        let cur = total.act_on_state(raw.end());
        let pi = sorting_permutation(&cur, mv.from);
        total = pi.compose(&total);
        let cur = pi.act_on_state(&cur);
        permutations.push(pi);
        let (m, next) = lift_step(mc, &hw, i + 1, &cur, from, mv, to)?;
        let back = total.inverse();
        raw.push(back.act_on_move(&m), back.act_on_state(&next));
        from = to;
    }
    Ok(LiftTrace { path: total.act_on_path(&raw), permutations })
}

/// Lift a full counting solution to a labelled solution.
pub fn lift_solution(mc: &McPuzzle, solution: &McPath) -> Result<LiftTrace> {
    validate_solution(mc, solution)?;
    let trace = lift_path(mc, solution)?;
    validate_solution(&hw_twin(mc)?, &trace.path)?;
    Ok(trace)
}
