//! The orbit category: a morphism `s1 -> s2` is a permutation `π` together
//! with a labelled walk `s1 -> π·s2`. Composition twists the second walk by
//! the first permutation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::laws::LawReport;
use super::{Functor, PathCategory};
use crate::error::Result;
use crate::model::{HwMove, HwPuzzle, HwState, McMove, McState};
use crate::path::Path;
use crate::symmetry::{project, project_path, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitMorphism {
    pub source: HwState,
    pub target: HwState,
    pub perm: Permutation,
    /// Walk from `source` to `perm · target`.
    pub path: Path<HwState, HwMove>,
}

impl OrbitMorphism {
    /// Tag a walk with `perm`; the target is `perm⁻¹ · path.end()`.
    pub fn new(perm: Permutation, path: Path<HwState, HwMove>) -> Self {
        let target = perm.inverse().act_on_state(path.end());
        OrbitMorphism { source: path.start, target, perm, path }
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }
}

pub struct OrbitCategory<'c, 'g> {
    hw: &'c PathCategory<'g, HwPuzzle>,
    perms: Vec<Permutation>,
}

impl<'c, 'g> OrbitCategory<'c, 'g> {
    pub fn new(hw: &'c PathCategory<'g, HwPuzzle>) -> Self {
        use crate::model::Puzzle;
        let n = hw.graph().puzzle().n();
        OrbitCategory { hw, perms: Permutation::all(n) }
    }

    pub fn base(&self) -> &PathCategory<'g, HwPuzzle> {
        self.hw
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn identity(&self, s: &HwState) -> OrbitMorphism {
        OrbitMorphism::new(Permutation::identity(s.n()), Path::identity(*s))
    }

    /// `p2 ∘ p1 = (π1 π2, π1·q2 ∘ q1)`.
    pub fn compose(&self, p2: &OrbitMorphism, p1: &OrbitMorphism) -> Option<OrbitMorphism> {
        if p1.target != p2.source || p1.len() + p2.len() > self.hw.bound() {
            return None;
        }
        let twisted = p1.perm.act_on_path(&p2.path);
        let path = p1.path.then(&twisted)?;
        Some(OrbitMorphism { source: p1.source, target: p2.target, perm: p1.perm.compose(&p2.perm), path })
    }

    /// Disjoint union over `π` of `Hom_HW(s1, π·s2)`; equal walks under
    /// different `π` stay distinct.
    pub fn hom(&self, s1: &HwState, s2: &HwState) -> Result<Vec<OrbitMorphism>> {
        let mut out = Vec::new();
        for pi in &self.perms {
            for q in self.hw.hom(s1, &pi.act_on_state(s2))? {
                out.push(OrbitMorphism { source: *s1, target: *s2, perm: pi.clone(), path: q });
            }
        }
        Ok(out)
    }

    fn random_walk(&self, rng: &mut ChaCha8Rng, max_len: usize) -> Path<HwState, HwMove> {
        let g = self.hw.graph();
        let mut at = rng.gen_range(0..g.len());
        let len = rng.gen_range(0..=max_len);
        let mut path = Path::identity(*g.vertex(at));
        for _ in 0..len {
            let out = g.out_edges(at);
            if out.is_empty() {
                break;
            }
            let (m, v) = &out[rng.gen_range(0..out.len())];
            path.push(*m, *g.vertex(*v));
            at = *v;
        }
        path
    }

    /// Sample `samples` composable triples with total length `<= max_len`
    /// and check associativity, both identity laws, and functoriality of
    /// `OrbitFunctor` on the pairs and triples.
    pub fn check_laws(&self, samples: usize, max_len: usize, seed: u64) -> Vec<LawReport> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut assoc = Tally::new("orbit category: associativity");
        let mut unit = Tally::new("orbit category: identity laws");
        let mut f_comp = Tally::new("orbit functor: composition");
        let mut f_id = Tally::new("orbit functor: identity");
        let f = OrbitFunctor;
        let max_len = max_len.min(self.hw.bound());
        for _ in 0..samples {
            let w = self.random_walk(&mut rng, max_len);
            let i = rng.gen_range(0..=w.len());
            let j = rng.gen_range(i..=w.len());
            let pick = |rng: &mut ChaCha8Rng| self.perms[rng.gen_range(0..self.perms.len())].clone();
            let (pi1, pi2, pi3) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let p1 = OrbitMorphism::new(pi1.clone(), w.prefix(i));
            let p2 = OrbitMorphism::new(pi2.clone(), pi1.inverse().act_on_path(&w.suffix(i).prefix(j - i)));
            let p12 = pi1.compose(&pi2);
            let p3 = OrbitMorphism::new(pi3, p12.inverse().act_on_path(&w.suffix(j)));

            let left = self.compose(&p3, &p2).and_then(|r| self.compose(&r, &p1));
            let right = self.compose(&p2, &p1).and_then(|r| self.compose(&p3, &r));
            assoc.record(left.is_some() && left == right, || format!("triple along a walk from {}", w.start));

            let id_src = self.identity(&p1.source);
            let id_tgt = self.identity(&p1.target);
            let ok = self.compose(&p1, &id_src).as_ref() == Some(&p1) && self.compose(&id_tgt, &p1).as_ref() == Some(&p1);
            unit.record(ok, || format!("identity law at {}", p1.source));

            let c21 = self.compose(&p2, &p1);
            let ok = c21.as_ref().map(|c| f.map_morphism(c)) == f.map_morphism(&p1).then(&f.map_morphism(&p2));
            f_comp.record(ok, || format!("F(p2∘p1) on a walk from {}", w.start));

            let ok = f.map_morphism(&id_src) == Path::identity(f.map_object(&p1.source));
            f_id.record(ok, || format!("F(id) at {}", p1.source));
        }
        vec![assoc.into(), unit.into(), f_comp.into(), f_id.into()]
    }
}

struct Tally(LawReport);

impl Tally {
    fn new(law: &str) -> Self {
        Tally(LawReport { law: law.into(), checked: 0, failures: 0, first_failure: None })
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.0.checked += 1;
        if !ok {
            self.0.failures += 1;
            if self.0.first_failure.is_none() {
                self.0.first_failure = Some(what());
            }
        }
    }
}

impl From<Tally> for LawReport {
    fn from(t: Tally) -> Self {
        t.0
    }
}

/// `Orb(Cat_HW) -> Cat_MC`: a state goes to its head counts, a tagged walk
/// to the head counts of the walk (the tag is forgotten).
#[derive(Debug, Clone, Copy, Default)]
pub struct OrbitFunctor;

impl Functor for OrbitFunctor {
    type SrcObj = HwState;
    type SrcMor = OrbitMorphism;
    type DstObj = McState;
    type DstMor = Path<McState, McMove>;

    fn map_object(&self, o: &HwState) -> McState {
        project(o)
    }

    fn map_morphism(&self, m: &OrbitMorphism) -> Path<McState, McMove> {
        project_path(&m.path)
    }
}
