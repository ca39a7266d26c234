//! Jealous-husbands model: labelled wives and husbands.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::person::PersonSet;
use super::{CaseKind, Flavor, Limits, Puzzle, Side, StateKind, TransitionCase};
use crate::error::{Error, Result};

/// Both banks and the boat; the right bank is the complement of the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HwStateRepr", into = "HwStateRepr")]
pub struct HwState {
    n: u8,
    left: PersonSet,
    boat: Side,
}

impl HwState {
    pub fn new(n: usize, left: PersonSet, boat: Side) -> Result<Self> {
        if !(2..=super::person::MAX_PEOPLE_PER_ROLE).contains(&n) {
            return Err(Error::InvalidSize(n));
        }
        if !left.is_subset(&PersonSet::universe(n)) {
            return Err(Error::Invalid(format!("bank {{{left}}} mentions people beyond n={n}")));
        }
        Ok(HwState { n: n as u8, left, boat })
    }

    pub(crate) fn new_unchecked(n: usize, left: PersonSet, boat: Side) -> Self {
        HwState { n: n as u8, left, boat }
    }

    /// Everyone on the left with the boat.
    pub fn initial(n: usize) -> Self {
        HwState::new_unchecked(n, PersonSet::universe(n), Side::Left)
    }

    /// Everyone on the right with the boat.
    pub fn goal(n: usize) -> Self {
        HwState::new_unchecked(n, PersonSet::EMPTY, Side::Right)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn left(&self) -> PersonSet {
        self.left
    }

    pub fn right(&self) -> PersonSet {
        self.left.complement(self.n())
    }

    pub fn boat(&self) -> Side {
        self.boat
    }

    pub fn bank(&self, side: Side) -> PersonSet {
        match side {
            Side::Left => self.left(),
            Side::Right => self.right(),
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.left().is_safe() && self.right().is_safe()
    }

    /// Kind of the state read from the left bank.
    pub fn kind(&self) -> StateKind {
        self.kind_from(Side::Left)
    }

    pub fn kind_from(&self, side: Side) -> StateKind {
        StateKind::from_husbands(self.bank(side).husband_count(), self.n())
    }

    /// Matches the closed-form shape of kind (a), (b) or (c): wives alone,
    /// wives with every husband, or a set of whole couples. Used as a
    /// cross-check on `kind`.
    pub fn matches_kind(&self, kind: StateKind) -> bool {
        let l = self.left;
        let all = PersonSet::universe(self.n()).husbands_mask();
        match kind {
            StateKind::A => l.husbands_mask() == 0,
            StateKind::B => l.husbands_mask() == all,
            StateKind::C => {
                let p = l.husband_count();
                l.wives_mask() == l.husbands_mask() && p > 0 && p < self.n()
            }
        }
    }

    pub(crate) fn with_left(&self, left: PersonSet, boat: Side) -> HwState {
        HwState { n: self.n, left, boat }
    }

    /// Sail `load` from the boat's bank; no safety checks.
    pub fn apply(&self, load: PersonSet) -> HwState {
        let left = match self.boat {
            Side::Left => self.left.difference(&load),
            Side::Right => self.left.union(&load),
        };
        self.with_left(left, self.boat.other())
    }
}

impl Ord for HwState {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.left.cmp(&other.left))
            .then_with(|| self.boat.cmp(&other.boat))
    }
}

impl PartialOrd for HwState {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HwState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks: Vec<String> = self.left.iter().map(|p| p.to_string()).collect();
        toks.push("|".into());
        toks.extend(self.right().iter().map(|p| p.to_string()));
        toks.push(":".into());
        toks.push(self.boat.to_string());
        write!(f, "[{}]", toks.join(" "))
    }
}

impl std::str::FromStr for HwState {
    type Err = Error;

    /// Parses `[w1 w3 h1 h2 h3 | w2 : L]`; `n` is inferred from the people.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("state `{s}` must be bracketed")))?;
        let (banks, side) = inner
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("state `{s}` lacks `: L|R`")))?;
        let (l, r) = banks
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("state `{s}` lacks `|`")))?;
        let left: PersonSet = l.parse()?;
        let right: PersonSet = r.parse()?;
        let boat: Side = side.parse()?;
        from_banks(left, right, boat)
    }
}

fn from_banks(left: PersonSet, right: PersonSet, boat: Side) -> Result<HwState> {
    if !left.intersection(&right).is_empty() {
        return Err(Error::Parse(format!("people on both banks: {}", left.intersection(&right))));
    }
    let all = left.union(&right);
    let n = all.wife_count();
    if n < 2 || all != PersonSet::universe(n) {
        return Err(Error::Parse(format!(
            "banks must hold w1..wn and h1..hn exactly once each, got {{{all}}}"
        )));
    }
    HwState::new(n, left, boat)
}

#[derive(Serialize, Deserialize)]
struct HwStateRepr {
    left: Vec<String>,
    right: Vec<String>,
    boat: Side,
}

fn parse_people(v: &[String]) -> Result<PersonSet> {
    v.join(" ").parse()
}

impl TryFrom<HwStateRepr> for HwState {
    type Error = Error;

    fn try_from(r: HwStateRepr) -> Result<Self> {
        from_banks(parse_people(&r.left)?, parse_people(&r.right)?, r.boat)
    }
}

impl From<HwState> for HwStateRepr {
    fn from(s: HwState) -> Self {
        HwStateRepr {
            left: s.left().iter().map(|p| p.to_string()).collect(),
            right: s.right().iter().map(|p| p.to_string()).collect(),
            boat: s.boat(),
        }
    }
}

/// A boat load and the bank it leaves from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "HwMoveRepr", into = "HwMoveRepr")]
pub struct HwMove {
    pub load: PersonSet,
    pub from: Side,
}

impl fmt::Display for HwMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}:{}", self.load, self.from)
    }
}

impl std::str::FromStr for HwMove {
    type Err = Error;

    /// Parses `{w2 w3}:L`.
    fn from_str(s: &str) -> Result<Self> {
        let (load, side) = s
            .trim()
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("move `{s}` lacks `:L|R`")))?;
        let load = load
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("move `{s}` load must be braced")))?;
        Ok(HwMove { load: load.parse()?, from: side.parse()? })
    }
}

#[derive(Serialize, Deserialize)]
struct HwMoveRepr {
    load: Vec<String>,
    from: Side,
}

impl TryFrom<HwMoveRepr> for HwMove {
    type Error = Error;

    fn try_from(r: HwMoveRepr) -> Result<Self> {
        Ok(HwMove { load: parse_people(&r.load)?, from: r.from })
    }
}

impl From<HwMove> for HwMoveRepr {
    fn from(m: HwMove) -> Self {
        HwMoveRepr { load: m.load.iter().map(|p| p.to_string()).collect(), from: m.from }
    }
}

/// `n` couples and a boat of capacity `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HwPuzzle {
    n: usize,
    b: usize,
}

impl HwPuzzle {
    pub fn new(n: usize, b: usize, limits: &Limits) -> Result<Self> {
        limits.check(n)?;
        if b == 0 {
            return Err(Error::InvalidCapacity(b));
        }
        Ok(HwPuzzle { n, b })
    }

    /// A valid move is non-empty, fits the boat, is safe and leaves from the boat's bank.
    pub fn is_valid_move(&self, from: &HwState, mv: &HwMove) -> bool {
        mv.from == from.boat()
            && !mv.load.is_empty()
            && mv.load.len() <= self.b
            && mv.load.is_safe()
            && mv.load.is_subset(&from.bank(mv.from))
    }
}

impl Puzzle for HwPuzzle {
    type State = HwState;
    type Move = HwMove;

    const FLAVOR: Flavor = Flavor::Hw;

    fn n(&self) -> usize {
        self.n
    }

    fn b(&self) -> usize {
        self.b
    }

    fn boat_side(&self, s: &Self::State) -> Side {
        s.boat()
    }

    fn initial(&self) -> HwState {
        HwState::initial(self.n)
    }

    fn goal(&self) -> HwState {
        HwState::goal(self.n)
    }

    fn states(&self) -> Vec<HwState> {
        let n = self.n;
        let mut out = Vec::new();
        for wives in 0..=super::person::full_mask(n) as u32 {
            for husbands in 0..=super::person::full_mask(n) as u32 {
                let left = PersonSet::from_masks(wives as u16, husbands as u16);
                for boat in [Side::Left, Side::Right] {
                    let s = HwState::new_unchecked(n, left, boat);
                    if s.is_admissible() {
                        out.push(s);
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn is_admissible(&self, s: &HwState) -> bool {
        s.n() == self.n && s.is_admissible()
    }

    fn successors(&self, s: &HwState) -> Vec<(HwMove, HwState)> {
        let from = s.boat();
        let mut out: Vec<(HwMove, HwState)> = s
            .bank(from)
            .subsets_up_to(self.b)
            .into_iter()
            .filter(|load| load.is_safe())
            .map(|load| (HwMove { load, from }, s.apply(load)))
            .filter(|(_, next)| next.is_admissible())
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    fn move_between(&self, from: &HwState, to: &HwState) -> Option<HwMove> {
        if from.n() != self.n || to.n() != self.n || to.boat() != from.boat().other() {
            return None;
        }
        let side = from.boat();
        let before = from.bank(side);
        let after = to.bank(side);
        if !after.is_subset(&before) {
            return None;
        }
        let mv = HwMove { load: before.difference(&after), from: side };
        (self.is_valid_move(from, &mv) && from.is_admissible() && to.is_admissible()).then_some(mv)
    }

    fn classify(&self, from: &HwState, mv: &HwMove) -> Result<TransitionCase> {
        if !self.is_valid_move(from, mv) || !from.apply(mv.load).is_admissible() {
            return Err(Error::Unclassifiable(format!("{mv} is not a legal move from {from}")));
        }
        let kind = classify_load(self.n, from.bank(mv.from), from.bank(mv.from.other()), mv.load)
            .ok_or_else(|| Error::Unclassifiable(format!("{mv} from {from}")))?;
        Ok(TransitionCase { kind, flavor: Flavor::Hw, from: mv.from })
    }

    fn parse_state(&self, s: &str) -> Result<HwState> {
        let st: HwState = s.parse()?;
        if st.n() != self.n {
            return Err(Error::Parse(format!("state `{s}` has n={}, expected {}", st.n(), self.n)));
        }
        Ok(st)
    }

    fn parse_move(&self, s: &str) -> Result<HwMove> {
        let mv: HwMove = s.parse()?;
        if mv.load.max_index() > self.n {
            return Err(Error::Parse(format!("move `{s}` mentions people beyond n={}", self.n)));
        }
        Ok(mv)
    }
}

/// Case of a load leaving `dep` for `far`, seen as if `dep` were the left bank.
fn classify_load(n: usize, dep: PersonSet, far: PersonSet, load: PersonSet) -> Option<CaseKind> {
    let lw = load.wives_mask();
    let lh = load.husbands_mask();
    match StateKind::from_husbands(dep.husband_count(), n) {
        StateKind::A => (lh == 0).then_some(CaseKind::I),
        StateKind::B => {
            let far_w = far.wives_mask();
            if lh == 0 {
                Some(CaseKind::II)
            } else if far_w & !lh == 0 && lw == lh & !far_w {
                Some(CaseKind::IV)
            } else if lh == dep.husbands_mask() {
                Some(CaseKind::III)
            } else {
                None
            }
        }
        StateKind::C => {
            if lw == lh {
                Some(CaseKind::VI)
            } else if lh == dep.husbands_mask() && lw & !lh == 0 {
                Some(CaseKind::V)
            } else {
                None
            }
        }
    }
}
