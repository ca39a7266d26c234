//! People, states, moves and transitions for both puzzle flavors.
//!
//! `hw` holds the jealous-husbands model (labelled people), `mc` the
//! missionaries-and-cannibals model (head counts). Both implement [`Puzzle`],
//! which is all the solver and category layers rely on.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod hw;
pub mod mc;
pub mod person;

pub use hw::{HwMove, HwPuzzle, HwState};
pub use mc::{Counts, McMove, McPuzzle, McState};
pub use person::{Person, PersonSet, Role};

/// Default upper bound on `n` for anything that enumerates a state space.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "L" | "l" | "left" | "Left" => Ok(Side::Left),
            "R" | "r" | "right" | "Right" => Ok(Side::Right),
            other => Err(Error::Parse(format!("bad boat side `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Hw,
    Mc,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Hw => "hw",
            Flavor::Mc => "mc",
        })
    }
}

/// Smallest boat capacity for which `n` couples can cross.
pub fn capacity(n: usize) -> Result<usize> {
    match n {
        0 | 1 => Err(Error::InvalidSize(n)),
        2 | 3 => Ok(2),
        4 | 5 => Ok(3),
        _ => Ok(4),
    }
}

/// Which bank holds the husbands (missionaries) in a state, seen from a
/// chosen bank: none of them, all of them, or some (then paired with wives).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateKind {
    /// No husbands on the bank.
    A,
    /// All husbands on the bank.
    B,
    /// Some but not all husbands on the bank.
    C,
}

impl StateKind {
    pub(crate) fn from_husbands(on_bank: usize, n: usize) -> StateKind {
        if on_bank == 0 {
            StateKind::A
        } else if on_bank == n {
            StateKind::B
        } else {
            StateKind::C
        }
    }
}

impl fmt::Display for StateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateKind::A => "a",
            StateKind::B => "b",
            StateKind::C => "c",
        })
    }
}

/// The six shapes a boat load can take, keyed by the departure bank's kind.
///
/// * `I`: wives only, departure bank has no husbands.
/// * `II`: wives only, departure bank has every husband.
/// * `III`: every husband, plus wives that leave some wife behind.
/// * `IV`: husbands of all wives on the far bank, plus whole couples.
/// * `V`: all husbands of a mixed bank with some (not all) of their wives.
/// * `VI`: whole couples from a mixed bank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseKind {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl CaseKind {
    pub fn roman(self) -> &'static str {
        match self {
            CaseKind::I => "i",
            CaseKind::II => "ii",
            CaseKind::III => "iii",
            CaseKind::IV => "iv",
            CaseKind::V => "v",
            CaseKind::VI => "vi",
        }
    }
}

/// A classified transition. Counting-flavor labels carry a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransitionCase {
    pub kind: CaseKind,
    pub flavor: Flavor,
    pub from: Side,
}

impl fmt::Display for TransitionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.roman())?;
        if self.flavor == Flavor::Mc {
            f.write_str("'")?;
        }
        if self.from == Side::Right {
            f.write_str(" (mirrored)")?;
        }
        Ok(())
    }
}

/// Enumeration bounds shared by everything that sweeps a state space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: DEFAULT_MAX_N }
    }
}

impl Limits {
    pub fn check(&self, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidSize(n));
        }
        if n > self.max_n || n > person::MAX_PEOPLE_PER_ROLE {
            return Err(Error::CapExceeded { n, cap: self.max_n.min(person::MAX_PEOPLE_PER_ROLE) });
        }
        Ok(())
    }
}

/// A river-crossing instance: a finite state space with a start and a goal.
pub trait Puzzle: Clone + Send + Sync {
    type State: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + Serialize + DeserializeOwned;
    type Move: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + Serialize + DeserializeOwned;

    const FLAVOR: Flavor;

    fn n(&self) -> usize;
    fn b(&self) -> usize;
    fn initial(&self) -> Self::State;
    fn goal(&self) -> Self::State;

    /// Every admissible state, sorted.
    fn states(&self) -> Vec<Self::State>;

    fn is_admissible(&self, s: &Self::State) -> bool;

    /// The bank the boat is on in `s`.
    fn boat_side(&self, s: &Self::State) -> Side;

    /// All `(move, next)` pairs leaving `s`, sorted by `next` then move.
    fn successors(&self, s: &Self::State) -> Vec<(Self::Move, Self::State)>;

    /// The move carrying `from` to `to`, if that is a legal single trip.
    fn move_between(&self, from: &Self::State, to: &Self::State) -> Option<Self::Move>;

    fn classify(&self, from: &Self::State, mv: &Self::Move) -> Result<TransitionCase>;

    fn parse_state(&self, s: &str) -> Result<Self::State>;
    fn parse_move(&self, s: &str) -> Result<Self::Move>;
}
