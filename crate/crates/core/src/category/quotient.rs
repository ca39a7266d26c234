use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{Functor, PathCategory, QuotientFunctor};
use crate::error::Result;
use crate::model::{HwMove, HwPuzzle, HwState, McMove, McPuzzle, McState, Puzzle};
use crate::path::Path;
use crate::solver::lift_path;
use crate::symmetry::canonical;

/// A morphism of the orbit quotient: a walk whose states and loads are all
/// canonical orbit representatives.
pub type OrbitPath = Path<HwState, HwMove>;

const MAX_COUNTEREXAMPLES: usize = 20;

/// `Cat_{HW/~}` truncated at the same bound as the labelled category it is built from.
#[derive(Debug, Clone)]
pub struct QuotientCategory {
    n: usize,
    b: usize,
    bound: usize,
    objects: Vec<HwState>,
    homs: BTreeMap<HwState, BTreeMap<HwState, Vec<OrbitPath>>>,
}

impl QuotientCategory {
    /// Every orbit walk is the image of a walk from the orbit's canonical
    /// representative (relabel any other realisation), so walks from the
    /// representatives generate all morphisms.
    pub fn build(hw: &PathCategory<'_, HwPuzzle>) -> Result<Self> {
        let objects: Vec<HwState> = hw
            .objects()
            .iter()
            .map(canonical)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let homs = objects
            .par_iter()
            .map(|a| {
                let mut by_target: BTreeMap<HwState, BTreeSet<OrbitPath>> = BTreeMap::new();
                for w in hw.walks_from(a)? {
                    let q = QuotientFunctor.map_morphism(&w);
                    by_target.entry(*q.end()).or_default().insert(q);
                }
                let by_target = by_target.into_iter().map(|(t, s)| (t, s.into_iter().collect())).collect();
                Ok((*a, by_target))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        let puzzle = hw.graph().puzzle();
        Ok(QuotientCategory { n: puzzle.n(), b: puzzle.b(), bound: hw.bound(), objects, homs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn objects(&self) -> &[HwState] {
        &self.objects
    }

    pub fn hom(&self, a: &HwState, b: &HwState) -> &[OrbitPath] {
        self.homs.get(a).and_then(|m| m.get(b)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn morphisms_from(&self, a: &HwState) -> impl Iterator<Item = &OrbitPath> + '_ {
        self.homs.get(a).into_iter().flat_map(|m| m.values().flatten())
    }

    pub fn all_morphisms(&self) -> Vec<OrbitPath> {
        self.objects.iter().flat_map(|a| self.morphisms_from(a).cloned()).collect()
    }

    pub fn morphism_count(&self) -> usize {
        self.homs.values().flat_map(|m| m.values()).map(Vec::len).sum()
    }

    pub fn identity(&self, a: &HwState) -> OrbitPath {
        Path::identity(*a)
    }

    pub fn compose(&self, q: &OrbitPath, p: &OrbitPath) -> Option<OrbitPath> {
        if p.len() + q.len() > self.bound {
            return None;
        }
        p.then(q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub property: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub b: usize,
    #[serde(rename = "L")]
    pub bound: usize,
    pub full: bool,
    pub faithful: bool,
    pub essentially_surjective: bool,
    pub counterexamples: Vec<Counterexample>,
    pub objects: usize,
    pub morphisms: usize,
    pub target_morphisms: usize,
    pub note: String,
}

impl EquivalenceReport {
    pub fn is_equivalence(&self) -> bool {
        self.full && self.faithful && self.essentially_surjective
    }
}

type McPath = Path<McState, McMove>;

/// Check that `functor` is full, faithful and essentially surjective on
/// the truncated categories. Fullness is shown constructively: each target
/// walk is lifted and the lift's orbit walk must map back onto it; if the
/// functor disagrees on that lift, any other preimage in the hom-set counts.
pub fn check_equivalence<F>(
    quotient: &QuotientCategory,
    mc: &PathCategory<'_, McPuzzle>,
    functor: &F,
) -> Result<EquivalenceReport>
where
    F: Functor<SrcObj = HwState, SrcMor = OrbitPath, DstObj = McState, DstMor = McPath>,
{
    let mc_puzzle = mc.graph().puzzle();
    let mut preimages: HashMap<McState, Vec<HwState>> = HashMap::new();
    for a in quotient.objects() {
        preimages.entry(functor.map_object(a)).or_default().push(*a);
    }

    struct Partial {
        faithful: Vec<Counterexample>,
        full: Vec<Counterexample>,
        target_morphisms: usize,
    }

    let partials: Vec<Partial> = quotient
        .objects()
        .par_iter()
        .map(|a| -> Result<Partial> {
            let mut faithful = Vec::new();
            let mut images: HashMap<HwState, HashSet<McPath>> = HashMap::new();
            for (b, hom) in quotient.homs.get(a).into_iter().flatten() {
                let set = images.entry(*b).or_default();
                for m in hom {
                    if !set.insert(functor.map_morphism(m)) && faithful.len() < MAX_COUNTEREXAMPLES {
                        faithful.push(Counterexample {
                            property: "faithful".into(),
                            detail: format!("two morphisms {a} -> {b} share the image of {m}"),
                        });
                    }
                }
            }

            let mut full = Vec::new();
            let fa = functor.map_object(a);
            let walks = mc.walks_from(&fa)?;
            let target_morphisms = walks.len();
            for w in &walks {
                let lifted = lift_path(mc_puzzle, w)
                    .ok()
                    .map(|t| QuotientFunctor.map_morphism(&t.path))
                    .filter(|q| q.start == *a && quotient.hom(a, q.end()).binary_search(q).is_ok());
                let by_lift = lifted.is_some_and(|q| functor.map_morphism(&q) == *w);
                let by_search = || {
                    preimages
                        .get(w.end())
                        .into_iter()
                        .flatten()
                        .any(|b| images.get(b).is_some_and(|s| s.contains(w)))
                };
                if !by_lift && !by_search() && full.len() < MAX_COUNTEREXAMPLES {
                    full.push(Counterexample {
                        property: "full".into(),
                        detail: format!("no morphism from {a} maps to {w}"),
                    });
                }
            }
            Ok(Partial { faithful, full, target_morphisms })
        })
        .collect::<Result<_>>()?;

    let mut counterexamples = Vec::new();
    let mut faithful = true;
    let mut full = true;
    let mut target_morphisms = 0;
    for p in partials {
        faithful &= p.faithful.is_empty();
        full &= p.full.is_empty();
        target_morphisms += p.target_morphisms;
        counterexamples.extend(p.faithful);
        counterexamples.extend(p.full);
    }

    let mut essentially_surjective = true;
    for s in mc.objects() {
        let rep = crate::symmetry::section(s);
        let hit = quotient.objects().binary_search(&rep).is_ok() && functor.map_object(&rep) == *s;
        if !hit {
            essentially_surjective = false;
            counterexamples.push(Counterexample {
                property: "essentially_surjective".into(),
                detail: format!("{s} is not the image of its canonical orbit {rep}"),
            });
        }
    }
    counterexamples.truncate(3 * MAX_COUNTEREXAMPLES);

    Ok(EquivalenceReport {
        n: quotient.n(),
        b: quotient.b(),
        bound: quotient.bound(),
        full,
        faithful,
        essentially_surjective,
        counterexamples,
        objects: quotient.objects().len(),
        morphisms: quotient.morphism_count(),
        target_morphisms,
        note: format!("checked on walks of length <= {} only", quotient.bound()),
    })
}
