use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest instance size a [`PersonSet`] can hold.
pub const MAX_PEOPLE_PER_ROLE: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Wife,
    Husband,
}

/// A wife or a husband; couples share an index in `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Person {
    pub role: Role,
    pub index: usize,
}

impl Person {
    pub fn wife(index: usize) -> Self {
        Person { role: Role::Wife, index }
    }

    pub fn husband(index: usize) -> Self {
        Person { role: Role::Husband, index }
    }
}

impl fmt::Display for Person {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.role {
            Role::Wife => write!(f, "w{}", self.index),
            Role::Husband => write!(f, "h{}", self.index),
        }
    }
}

impl FromStr for Person {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (role, digits) = match s.chars().next() {
            Some('w') => (Role::Wife, &s[1..]),
            Some('h') => (Role::Husband, &s[1..]),
            _ => return Err(Error::Parse(format!("bad person token `{s}`"))),
        };
        let index: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad person index in `{s}`")))?;
        if index == 0 || index > MAX_PEOPLE_PER_ROLE {
            return Err(Error::Parse(format!("person index out of range in `{s}`")));
        }
        Ok(Person { role, index })
    }
}

/// A set of people stored as two bitmasks; bit `i - 1` stands for index `i`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PersonSet {
    wives: u16,
    husbands: u16,
}

impl PersonSet {
    pub const EMPTY: PersonSet = PersonSet { wives: 0, husbands: 0 };

    pub fn from_masks(wives: u16, husbands: u16) -> Self {
        PersonSet { wives, husbands }
    }

    /// Everyone: `w1..wn` and `h1..hn`.
    pub fn universe(n: usize) -> Self {
        let m = full_mask(n);
        PersonSet { wives: m, husbands: m }
    }

    /// `W_{p,q}` together with `H_{r,s}`; empty ranges are allowed (`p > q`).
    pub fn blocks(wives: (usize, usize), husbands: (usize, usize)) -> Self {
        PersonSet {
            wives: range_mask(wives.0, wives.1),
            husbands: range_mask(husbands.0, husbands.1),
        }
    }

    pub fn wives_mask(&self) -> u16 {
        self.wives
    }

    pub fn husbands_mask(&self) -> u16 {
        self.husbands
    }

    pub fn wife_count(&self) -> usize {
        self.wives.count_ones() as usize
    }

    pub fn husband_count(&self) -> usize {
        self.husbands.count_ones() as usize
    }

    pub fn len(&self) -> usize {
        self.wife_count() + self.husband_count()
    }

    pub fn is_empty(&self) -> bool {
        self.wives == 0 && self.husbands == 0
    }

    pub fn contains(&self, p: Person) -> bool {
        let bit = 1u16 << (p.index - 1);
        match p.role {
            Role::Wife => self.wives & bit != 0,
            Role::Husband => self.husbands & bit != 0,
        }
    }

    pub fn insert(&mut self, p: Person) {
        let bit = 1u16 << (p.index - 1);
        match p.role {
            Role::Wife => self.wives |= bit,
            Role::Husband => self.husbands |= bit,
        }
    }

    pub fn union(&self, other: &PersonSet) -> PersonSet {
        PersonSet {
            wives: self.wives | other.wives,
            husbands: self.husbands | other.husbands,
        }
    }

    pub fn difference(&self, other: &PersonSet) -> PersonSet {
        PersonSet {
            wives: self.wives & !other.wives,
            husbands: self.husbands & !other.husbands,
        }
    }

    pub fn intersection(&self, other: &PersonSet) -> PersonSet {
        PersonSet {
            wives: self.wives & other.wives,
            husbands: self.husbands & other.husbands,
        }
    }

    pub fn is_subset(&self, other: &PersonSet) -> bool {
        self.difference(other).is_empty()
    }

    /// Complement within the `n`-couple universe.
    pub fn complement(&self, n: usize) -> PersonSet {
        PersonSet::universe(n).difference(self)
    }

    /// No husband present, or every present wife has her husband present.
    pub fn is_safe(&self) -> bool {
        self.husbands == 0 || self.wives & !self.husbands == 0
    }

    pub fn max_index(&self) -> usize {
        let m = self.wives | self.husbands;
        (16 - m.leading_zeros()) as usize
    }

    /// Members in canonical order: wives by index, then husbands by index.
    pub fn iter(&self) -> impl Iterator<Item = Person> + '_ {
        bits(self.wives)
            .map(Person::wife)
            .chain(bits(self.husbands).map(Person::husband))
    }

    /// All non-empty subsets with at most `max_len` members.
    pub fn subsets_up_to(&self, max_len: usize) -> Vec<PersonSet> {
        let mut out = Vec::new();
        let mut w = self.wives;
        loop {
            let mut h = self.husbands;
            loop {
                let s = PersonSet { wives: w, husbands: h };
                if !s.is_empty() && s.len() <= max_len {
                    out.push(s);
                }
                if h == 0 {
                    break;
                }
                h = (h - 1) & self.husbands;
            }
            if w == 0 {
                break;
            }
            w = (w - 1) & self.wives;
        }
        out
    }
}

impl Ord for PersonSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PersonSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Person> for PersonSet {
    fn from_iter<I: IntoIterator<Item = Person>>(iter: I) -> Self {
        let mut s = PersonSet::EMPTY;
        for p in iter {
            s.insert(p);
        }
        s
    }
}

impl fmt::Display for PersonSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PersonSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = PersonSet::EMPTY;
        for tok in s.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let p: Person = tok.parse()?;
            if set.contains(p) {
                return Err(Error::Parse(format!("duplicate person `{p}`")));
            }
            set.insert(p);
        }
        Ok(set)
    }
}

pub(crate) fn full_mask(n: usize) -> u16 {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

/// Bits for indices `lo..=hi` (1-based); empty if `lo > hi`.
pub(crate) fn range_mask(lo: usize, hi: usize) -> u16 {
    if lo > hi || hi == 0 {
        return 0;
    }
    let lo = lo.max(1);
    full_mask(hi) & !full_mask(lo - 1)
}

fn bits(mut m: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i + 1)
        }
    })
}
