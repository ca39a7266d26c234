//! Missionaries-and-cannibals model: anonymous head counts.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CaseKind, Flavor, Limits, Puzzle, Side, StateKind, TransitionCase};
use crate::error::{Error, Result};

/// A `(cannibals, missionaries)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Counts {
    pub cannibals: usize,
    pub missionaries: usize,
}

impl Counts {
    pub fn new(cannibals: usize, missionaries: usize) -> Self {
        Counts { cannibals, missionaries }
    }

    pub fn total(&self) -> usize {
        self.cannibals + self.missionaries
    }

    pub fn is_safe(&self) -> bool {
        is_safe_mc(self.cannibals, self.missionaries)
    }
}

impl From<(usize, usize)> for Counts {
    fn from((c, m): (usize, usize)) -> Self {
        Counts::new(c, m)
    }
}

impl From<Counts> for (usize, usize) {
    fn from(c: Counts) -> Self {
        (c.cannibals, c.missionaries)
    }
}

impl fmt::Display for Counts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.cannibals, self.missionaries)
    }
}

impl std::str::FromStr for Counts {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("count pair `{s}` must be parenthesised")))?;
        let (c, m) = inner
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("count pair `{s}` lacks a comma")))?;
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad count in `{s}`")))
        };
        Ok(Counts::new(num(c)?, num(m)?))
    }
}

/// Missionaries absent, or not outnumbered.
pub fn is_safe_mc(cannibals: usize, missionaries: usize) -> bool {
    missionaries == 0 || cannibals <= missionaries
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "McStateRepr", into = "McStateRepr")]
pub struct McState {
    n: usize,
    left: Counts,
    boat: Side,
}

impl McState {
    pub fn new(n: usize, left: Counts, boat: Side) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize(n));
        }
        if left.cannibals > n || left.missionaries > n {
            return Err(Error::Invalid(format!("bank {left} exceeds n={n}")));
        }
        Ok(McState { n, left, boat })
    }

    pub(crate) fn new_unchecked(n: usize, left: Counts, boat: Side) -> Self {
        McState { n, left, boat }
    }

    pub fn initial(n: usize) -> Self {
        McState::new_unchecked(n, Counts::new(n, n), Side::Left)
    }

    pub fn goal(n: usize) -> Self {
        McState::new_unchecked(n, Counts::new(0, 0), Side::Right)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn left(&self) -> Counts {
        self.left
    }

    pub fn right(&self) -> Counts {
        Counts::new(self.n - self.left.cannibals, self.n - self.left.missionaries)
    }

    pub fn boat(&self) -> Side {
        self.boat
    }

    pub fn bank(&self, side: Side) -> Counts {
        match side {
            Side::Left => self.left(),
            Side::Right => self.right(),
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.left().is_safe() && self.right().is_safe()
    }

    pub fn kind(&self) -> StateKind {
        self.kind_from(Side::Left)
    }

    pub fn kind_from(&self, side: Side) -> StateKind {
        StateKind::from_husbands(self.bank(side).missionaries, self.n)
    }

    /// Closed-form shapes `((x,0),(y,n))`, `((x,n),(y,0))`, `((x,x),(y,y))`.
    pub fn matches_kind(&self, kind: StateKind) -> bool {
        let Counts { cannibals: x, missionaries: m } = self.left;
        match kind {
            StateKind::A => m == 0,
            StateKind::B => m == self.n,
            StateKind::C => m == x && x > 0 && x < self.n,
        }
    }

    /// Sail `load` from the boat's bank; `None` if the bank lacks the people.
    pub fn apply(&self, load: Counts) -> Option<McState> {
        let l = self.left;
        let left = match self.boat {
            Side::Left => Counts::new(
                l.cannibals.checked_sub(load.cannibals)?,
                l.missionaries.checked_sub(load.missionaries)?,
            ),
            Side::Right => {
                let c = l.cannibals + load.cannibals;
                let m = l.missionaries + load.missionaries;
                if c > self.n || m > self.n {
                    return None;
                }
                Counts::new(c, m)
            }
        };
        Some(McState { n: self.n, left, boat: self.boat.other() })
    }
}

impl fmt::Display for McState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}:{}]", self.left(), self.right(), self.boat)
    }
}

impl std::str::FromStr for McState {
    type Err = Error;

    /// Parses `[(2,3)|(1,0):L]`; `n` is inferred from the totals.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("state `{s}` must be bracketed")))?;
        let (banks, side) = inner
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("state `{s}` lacks `:L|R`")))?;
        let (l, r) = banks
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("state `{s}` lacks `|`")))?;
        from_banks(l.parse()?, r.parse()?, side.parse()?)
    }
}

fn from_banks(left: Counts, right: Counts, boat: Side) -> Result<McState> {
    let n = left.cannibals + right.cannibals;
    if left.missionaries + right.missionaries != n {
        return Err(Error::Parse(format!(
            "banks {left}|{right} hold different numbers of cannibals and missionaries"
        )));
    }
    McState::new(n, left, boat)
}

#[derive(Serialize, Deserialize)]
struct McStateRepr {
    left: Counts,
    right: Counts,
    boat: Side,
}

impl TryFrom<McStateRepr> for McState {
    type Error = Error;

    fn try_from(r: McStateRepr) -> Result<Self> {
        from_banks(r.left, r.right, r.boat)
    }
}

impl From<McState> for McStateRepr {
    fn from(s: McState) -> Self {
        McStateRepr { left: s.left(), right: s.right(), boat: s.boat() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct McMove {
    pub load: Counts,
    pub from: Side,
}

impl McMove {
    pub fn new(cannibals: usize, missionaries: usize, from: Side) -> Self {
        McMove { load: Counts::new(cannibals, missionaries), from }
    }
}

impl fmt::Display for McMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.load, self.from)
    }
}

impl std::str::FromStr for McMove {
    type Err = Error;

    /// Parses `(2,0):L`.
    fn from_str(s: &str) -> Result<Self> {
        let (load, side) = s
            .trim()
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("move `{s}` lacks `:L|R`")))?;
        Ok(McMove { load: load.parse()?, from: side.parse()? })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct McPuzzle {
    n: usize,
    b: usize,
}

impl McPuzzle {
    pub fn new(n: usize, b: usize, limits: &Limits) -> Result<Self> {
        limits.check(n)?;
        if b == 0 {
            return Err(Error::InvalidCapacity(b));
        }
        Ok(McPuzzle { n, b })
    }

    pub fn is_valid_move(&self, from: &McState, mv: &McMove) -> bool {
        let bank = from.bank(mv.from);
        mv.from == from.boat()
            && (1..=self.b).contains(&mv.load.total())
            && mv.load.is_safe()
            && mv.load.cannibals <= bank.cannibals
            && mv.load.missionaries <= bank.missionaries
    }
}

impl Puzzle for McPuzzle {
    type State = McState;
    type Move = McMove;

    const FLAVOR: Flavor = Flavor::Mc;

    fn n(&self) -> usize {
        self.n
    }

    fn b(&self) -> usize {
        self.b
    }

    fn boat_side(&self, s: &Self::State) -> Side {
        s.boat()
    }

    fn initial(&self) -> McState {
        McState::initial(self.n)
    }

    fn goal(&self) -> McState {
        McState::goal(self.n)
    }

    fn states(&self) -> Vec<McState> {
        let mut out = Vec::new();
        for c in 0..=self.n {
            for m in 0..=self.n {
                for boat in [Side::Left, Side::Right] {
                    let s = McState::new_unchecked(self.n, Counts::new(c, m), boat);
                    if s.is_admissible() {
                        out.push(s);
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn is_admissible(&self, s: &McState) -> bool {
        s.n() == self.n && s.is_admissible()
    }

    fn successors(&self, s: &McState) -> Vec<(McMove, McState)> {
        let from = s.boat();
        let bank = s.bank(from);
        let mut out = Vec::new();
        for c in 0..=bank.cannibals.min(self.b) {
            for m in 0..=bank.missionaries.min(self.b - c) {
                let mv = McMove::new(c, m, from);
                if !self.is_valid_move(s, &mv) {
                    continue;
                }
                if let Some(next) = s.apply(mv.load) {
                    if next.is_admissible() {
                        out.push((mv, next));
                    }
                }
            }
        }
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    fn move_between(&self, from: &McState, to: &McState) -> Option<McMove> {
        if from.n() != self.n || to.n() != self.n || to.boat() != from.boat().other() {
            return None;
        }
        let side = from.boat();
        let before = from.bank(side);
        let after = to.bank(side);
        let mv = McMove::new(
            before.cannibals.checked_sub(after.cannibals)?,
            before.missionaries.checked_sub(after.missionaries)?,
            side,
        );
        (self.is_valid_move(from, &mv) && from.is_admissible() && to.is_admissible()).then_some(mv)
    }

    fn classify(&self, from: &McState, mv: &McMove) -> Result<TransitionCase> {
        let legal = self.is_valid_move(from, mv)
            && from.apply(mv.load).is_some_and(|s| s.is_admissible());
        if !legal {
            return Err(Error::Unclassifiable(format!("{mv} is not a legal move from {from}")));
        }
        let dep = from.bank(mv.from);
        let far = from.bank(mv.from.other());
        let Counts { cannibals: c, missionaries: m } = mv.load;
        let kind = match StateKind::from_husbands(dep.missionaries, self.n) {
            StateKind::A => (m == 0).then_some(CaseKind::I),
            StateKind::B => {
                if m == 0 {
                    Some(CaseKind::II)
                } else if m == far.cannibals + c {
                    Some(CaseKind::IV)
                } else if m == self.n {
                    Some(CaseKind::III)
                } else {
                    None
                }
            }
            StateKind::C => {
                if c == m {
                    Some(CaseKind::VI)
                } else if m == dep.missionaries {
                    Some(CaseKind::V)
                } else {
                    None
                }
            }
        }
        .ok_or_else(|| Error::Unclassifiable(format!("{mv} from {from}")))?;
        Ok(TransitionCase { kind, flavor: Flavor::Mc, from: mv.from })
    }

    fn parse_state(&self, s: &str) -> Result<McState> {
        let st: McState = s.parse()?;
        if st.n() != self.n {
            return Err(Error::Parse(format!("state `{s}` has n={}, expected {}", st.n(), self.n)));
        }
        Ok(st)
    }

    fn parse_move(&self, s: &str) -> Result<McMove> {
        s.parse()
    }
}
