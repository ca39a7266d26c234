//! Alternating state/move sequences. Solutions, category morphisms and
//! fiber members are all `Path`s.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::Puzzle;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path<S, M> {
    pub start: S,
    pub steps: Vec<(M, S)>,
}

impl<S: Clone, M: Clone> Path<S, M> {
    /// The length-0 path at `s`.
    pub fn identity(s: S) -> Self {
        Path { start: s, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> &S {
        self.steps.last().map(|(_, s)| s).unwrap_or(&self.start)
    }

    pub fn states(&self) -> impl Iterator<Item = &S> + '_ {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, s)| s))
    }

    pub fn moves(&self) -> impl Iterator<Item = &M> + '_ {
        self.steps.iter().map(|(m, _)| m)
    }

    pub fn push(&mut self, mv: M, next: S) {
        self.steps.push((mv, next));
    }

    /// Prefix of the first `k` steps.
    pub fn prefix(&self, k: usize) -> Path<S, M> {
        Path { start: self.start.clone(), steps: self.steps[..k].to_vec() }
    }

    /// Suffix starting at state index `k`.
    pub fn suffix(&self, k: usize) -> Path<S, M> {
        let start = if k == 0 { self.start.clone() } else { self.steps[k - 1].1.clone() };
        Path { start, steps: self.steps[k..].to_vec() }
    }

    /// Relabel every state and move.
    pub fn map<S2, M2>(&self, fs: impl Fn(&S) -> S2, fm: impl Fn(&M) -> M2) -> Path<S2, M2> {
        Path {
            start: fs(&self.start),
            steps: self.steps.iter().map(|(m, s)| (fm(m), fs(s))).collect(),
        }
    }
}

impl<S: Clone + PartialEq, M: Clone> Path<S, M> {
    /// `then ∘ self`: follow `self`, then `then`. `None` if the endpoints differ.
    pub fn then(&self, then: &Path<S, M>) -> Option<Path<S, M>> {
        if self.end() != &then.start {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.extend(then.steps.iter().cloned());
        Some(Path { start: self.start.clone(), steps })
    }
}

impl<S: fmt::Display, M: fmt::Display> fmt::Display for Path<S, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for (m, s) in &self.steps {
            write!(f, " -{m}-> {s}")?;
        }
        Ok(())
    }
}

/// Check every step is a legal transition of `puzzle`. Step numbers are
/// 1-based and refer to the transition that failed (0 is the start state).
pub fn validate_path<P: Puzzle>(puzzle: &P, path: &Path<P::State, P::Move>) -> Result<()> {
    if !puzzle.is_admissible(&path.start) {
        return Err(Error::InvalidStep { step: 0, reason: format!("{} is not admissible", path.start) });
    }
    let mut prev = &path.start;
    for (i, (mv, next)) in path.steps.iter().enumerate() {
        match puzzle.move_between(prev, next) {
            Some(m) if &m == mv => {}
            Some(m) => {
                return Err(Error::InvalidStep {
                    step: i + 1,
                    reason: format!("move {mv} does not match {prev} -> {next} (expected {m})"),
                })
            }
            None => {
                return Err(Error::InvalidStep {
                    step: i + 1,
                    reason: format!("{prev} -> {next} is not a legal trip"),
                })
            }
        }
        prev = next;
    }
    Ok(())
}

/// A legal path from the initial to the goal state that never repeats a state.
pub fn validate_solution<P: Puzzle>(puzzle: &P, path: &Path<P::State, P::Move>) -> Result<()> {
    if path.start != puzzle.initial() {
        return Err(Error::InvalidStep { step: 0, reason: format!("{} is not the initial state", path.start) });
    }
    validate_path(puzzle, path)?;
    if path.end() != &puzzle.goal() {
        return Err(Error::InvalidStep {
            step: path.len(),
            reason: format!("path ends at {}, not the goal", path.end()),
        });
    }
    let mut seen = HashSet::new();
    for (i, s) in path.states().enumerate() {
        if !seen.insert(s) {
            return Err(Error::InvalidStep { step: i, reason: format!("state {s} repeats") });
        }
    }
    Ok(())
}

/// Build a path from states alone, restoring each move.
pub fn path_from_states<P: Puzzle>(puzzle: &P, states: &[P::State]) -> Result<Path<P::State, P::Move>> {
    let (first, rest) = states
        .split_first()
        .ok_or_else(|| Error::Parse("empty state sequence".into()))?;
    let mut path = Path::identity(first.clone());
    let mut prev = first;
    for (i, s) in rest.iter().enumerate() {
        let mv = puzzle.move_between(prev, s).ok_or_else(|| Error::InvalidStep {
            step: i + 1,
            reason: format!("{prev} -> {s} is not a legal trip"),
        })?;
        path.push(mv, s.clone());
        prev = s;
    }
    Ok(path)
}

/// One entry of a serialized path: states and moves alternate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathItem<S, M> {
    State(S),
    Move(M),
}

impl<S: Clone, M: Clone> Path<S, M> {
    pub fn to_items(&self) -> Vec<PathItem<S, M>> {
        let mut out = vec![PathItem::State(self.start.clone())];
        for (m, s) in &self.steps {
            out.push(PathItem::Move(m.clone()));
            out.push(PathItem::State(s.clone()));
        }
        out
    }

    pub fn from_items(items: Vec<PathItem<S, M>>) -> Result<Self> {
        let mut it = items.into_iter();
        let start = match it.next() {
            Some(PathItem::State(s)) => s,
            _ => return Err(Error::Parse("path must start with a state".into())),
        };
        let mut path = Path::identity(start);
        let mut pending: Option<M> = None;
        for (i, item) in it.enumerate() {
            match (item, pending.take()) {
                (PathItem::Move(m), None) => pending = Some(m),
                (PathItem::State(s), Some(m)) => path.push(m, s),
                _ => {
                    return Err(Error::Parse(format!("path item {} breaks the state/move alternation", i + 1)))
                }
            }
        }
        if pending.is_some() {
            return Err(Error::Parse("path ends with a move".into()));
        }
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Limits, McMove, McPuzzle, McState, Side};

    fn mc(s: &str) -> McState {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_composition() {
        let a = mc("[(3,3)|(0,0):L]");
        let b = mc("[(1,3)|(2,0):R]");
        let id: Path<McState, McMove> = Path::identity(a);
        let mut p = Path::identity(a);
        p.push(McMove::new(2, 0, Side::Left), b);
        assert_eq!(id.then(&p).unwrap(), p);
        assert_eq!(p.then(&Path::identity(b)).unwrap(), p);
        assert!(p.then(&p).is_none());
        assert_eq!(p.end(), &b);
        assert_eq!(p.suffix(1), Path::identity(b));
        assert_eq!(p.prefix(0), id);
    }

    #[test]
    fn validation_reports_first_bad_step() {
        let puzzle = McPuzzle::new(3, 2, &Limits::default()).unwrap();
        let states = [mc("[(3,3)|(0,0):L]"), mc("[(1,3)|(2,0):R]"), mc("[(1,1)|(2,2):L]")];
        let err = path_from_states(&puzzle, &states).unwrap_err();
        assert!(matches!(err, Error::InvalidStep { step: 2, .. }));
    }

    #[test]
    fn items_round_trip() {
        let puzzle = McPuzzle::new(3, 2, &Limits::default()).unwrap();
        let p = path_from_states(&puzzle, &[mc("[(3,3)|(0,0):L]"), mc("[(1,3)|(2,0):R]")]).unwrap();
        let json = serde_json::to_string(&p.to_items()).unwrap();
        let items: Vec<PathItem<McState, McMove>> = serde_json::from_str(&json).unwrap();
        assert_eq!(Path::from_items(items).unwrap(), p);
    }
}
