//! Relabelling couples: the symmetric group acting on jealous-husbands
//! states, its orbits, and the projection onto head counts.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Counts, HwMove, HwState, McMove, McState, PersonSet};
use crate::path::Path;

/// A bijection on `{1..n}`, stored 0-based. Serializes as the 1-based
/// image list, so `[3,1,2]` sends 1 to 3, 2 to 1 and 3 to 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n as u8).collect() }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation of 1..{n}")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { image: images.iter().map(|&i| (i - 1) as u8).collect() })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Image of a 1-based index.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation { image: other.image.iter().map(|&i| self.image[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { image: inv }
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n as u8)
            .permutations(n)
            .map(|image| Permutation { image })
            .collect()
    }

    /// The block rotation sending `1..p` to `n-p+1..n` and `p+1..n` to `1..n-p`.
    /// `p = n` (or 0) is the identity.
    pub fn rotation(n: usize, p: usize) -> Permutation {
        let p = p % n;
        Permutation { image: (0..n).map(|i| ((i + n - p) % n) as u8).collect() }
    }

    /// Member of the cyclic subgroup generated by `i ↦ i + 1 (mod n)`.
    pub fn is_rotation(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let shift = self.image[0] as usize;
        self.image.iter().enumerate().all(|(i, &v)| v as usize == (i + shift) % n)
    }

    pub fn act_on_set(&self, x: &PersonSet) -> PersonSet {
        PersonSet::from_masks(self.permute_mask(x.wives_mask()), self.permute_mask(x.husbands_mask()))
    }

    fn permute_mask(&self, mask: u16) -> u16 {
        let mut out = 0u16;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1 << self.image[i];
            m &= m - 1;
        }
        out
    }

    pub fn act_on_state(&self, s: &HwState) -> HwState {
        debug_assert_eq!(self.n(), s.n());
        HwState::new_unchecked(s.n(), self.act_on_set(&s.left()), s.boat())
    }

    pub fn act_on_move(&self, m: &HwMove) -> HwMove {
        HwMove { load: self.act_on_set(&m.load), from: m.from }
    }

    pub fn act_on_path(&self, p: &Path<HwState, HwMove>) -> Path<HwState, HwMove> {
        p.map(|s| self.act_on_state(s), |m| self.act_on_move(m))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images().iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("permutation `{s}` must be bracketed")))?;
        let images = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_images(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

/// An orbit under relabelling, with its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: HwState,
    pub members: Vec<HwState>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &HwState) -> bool {
        self.members.binary_search(s).is_ok()
    }
}

/// Sweep all `n!` relabellings of `s`.
pub fn orbit(s: &HwState) -> Orbit {
    let members: BTreeSet<HwState> = Permutation::all(s.n()).iter().map(|p| p.act_on_state(s)).collect();
    Orbit { representative: canonical(s), members: members.into_iter().collect() }
}

pub fn stabilizer(s: &HwState) -> Vec<Permutation> {
    Permutation::all(s.n())
        .into_iter()
        .filter(|p| p.act_on_state(s) == *s)
        .collect()
}

/// Forget names: count wives and husbands on each bank.
pub fn project(s: &HwState) -> McState {
    let l = s.left();
    McState::new_unchecked(s.n(), Counts::new(l.wife_count(), l.husband_count()), s.boat())
}

/// Lowest-indexed people on the left: `{w1..wc, h1..hm}`.
pub fn section(s: &McState) -> HwState {
    let l = s.left();
    HwState::new_unchecked(
        s.n(),
        PersonSet::blocks((1, l.cannibals), (1, l.missionaries)),
        s.boat(),
    )
}

/// Canonical orbit representative, `section(project(s))`.
pub fn canonical(s: &HwState) -> HwState {
    section(&project(s))
}

pub fn project_move(m: &HwMove) -> McMove {
    McMove::new(m.load.wife_count(), m.load.husband_count(), m.from)
}

/// Canonical member of a load's orbit: whole couples take the lowest
/// indices, then lone wives, then lone husbands.
pub fn canonical_load(x: &PersonSet) -> PersonSet {
    let w = x.wives_mask();
    let h = x.husbands_mask();
    let couples = (w & h).count_ones() as usize;
    let lone_w = (w & !h).count_ones() as usize;
    let lone_h = (h & !w).count_ones() as usize;
    let wives = PersonSet::blocks((1, couples + lone_w), (1, 0));
    let husbands = PersonSet::blocks((1, 0), (1, couples))
        .union(&PersonSet::blocks((1, 0), (couples + lone_w + 1, couples + lone_w + lone_h)));
    wives.union(&husbands)
}

pub fn canonical_move(m: &HwMove) -> HwMove {
    HwMove { load: canonical_load(&m.load), from: m.from }
}

pub fn project_path(p: &Path<HwState, HwMove>) -> Path<McState, McMove> {
    p.map(project, project_move)
}
