//! JSON reports for solutions and counts, and loading solution files back.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Flavor, Puzzle};
use crate::path::{path_from_states, validate_path, Path, PathItem};
use crate::solver::ShortestSolutions;

/// `{n, b, flavor, length, count, solutions: [[state, move, state, ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionsReport<S, M> {
    pub n: usize,
    pub b: usize,
    pub flavor: Flavor,
    pub length: usize,
    pub count: u128,
    pub solutions: Vec<Vec<PathItem<S, M>>>,
    /// Set when fewer solutions are listed than `count`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
}

impl<S: Clone, M: Clone> SolutionsReport<S, M> {
    pub fn from_shortest<P>(puzzle: &P, found: &ShortestSolutions<P>) -> Self
    where
        P: Puzzle<State = S, Move = M>,
    {
        SolutionsReport {
            n: puzzle.n(),
            b: puzzle.b(),
            flavor: P::FLAVOR,
            length: found.length,
            count: found.count,
            solutions: found.solutions.iter().map(Path::to_items).collect(),
            truncated: found.truncated,
        }
    }

    pub fn paths(&self) -> Result<Vec<Path<S, M>>> {
        self.solutions.iter().cloned().map(Path::from_items).collect()
    }
}

/// Read one path of `puzzle` from a solution file. Accepted shapes:
///
/// * a solutions report (the first listed solution is used),
/// * a JSON array of alternating states and moves,
/// * plain text, one state per line (moves optional, `#` starts a comment).
///
/// The path is checked step by step; the error names the first bad step.
pub fn parse_solution<P: Puzzle>(puzzle: &P, text: &str) -> Result<Path<P::State, P::Move>> {
    let trimmed = text.trim_start();
    let path = if trimmed.starts_with('{') {
        let report: SolutionsReport<P::State, P::Move> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("solution report: {e}")))?;
        if report.flavor != P::FLAVOR {
            return Err(Error::Parse(format!("report is for flavor {}, expected {}", report.flavor, P::FLAVOR)));
        }
        let first = report.solutions.into_iter().next().ok_or_else(|| Error::Parse("report lists no solutions".into()))?;
        Path::from_items(first)?
    } else if trimmed.starts_with('[') && serde_json::from_str::<serde_json::Value>(text).is_ok() {
        let items: Vec<PathItem<P::State, P::Move>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("solution array: {e}")))?;
        Path::from_items(items)?
    } else {
        parse_text(puzzle, text)?
    };
    validate_path(puzzle, &path)?;
    Ok(path)
}

fn parse_text<P: Puzzle>(puzzle: &P, text: &str) -> Result<Path<P::State, P::Move>> {
    let mut states = Vec::new();
    let mut moves = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') {
            let s = puzzle
                .parse_state(line)
                .map_err(|e| Error::InvalidStep { step: states.len(), reason: format!("line {}: {e}", k + 1) })?;
            states.push(s);
        } else {
            let m = puzzle
                .parse_move(line)
                .map_err(|e| Error::InvalidStep { step: states.len(), reason: format!("line {}: {e}", k + 1) })?;
            moves.push((states.len(), m));
        }
    }
    let path = path_from_states(puzzle, &states)?;
    for (after, m) in moves {
        match path.steps.get(after.wrapping_sub(1)) {
            Some((expected, _)) if *expected == m => {}
            _ => {
                return Err(Error::InvalidStep {
                    step: after,
                    reason: format!("move {m} does not match the surrounding states"),
                })
            }
        }
    }
    Ok(path)
}
