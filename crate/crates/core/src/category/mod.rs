//! Path categories of the state graphs, truncated at a path-length bound.
//!
//! Objects are states and morphisms are walks (states may repeat);
//! composition is concatenation. Hom-sets are infinite in general, so every
//! structure here carries a bound `L`: only walks of length `<= L` exist, and
//! a composite longer than `L` is undefined at that bound. All law checks
//! quantify over what is defined within the bound.

pub mod laws;
pub mod orbit;
pub mod quotient;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{HwMove, HwState, McMove, McState, Puzzle};
use crate::path::Path;
use crate::solver::StateGraph;
use crate::symmetry::{canonical, canonical_move, project, project_move};

pub use laws::{check_associativity, check_functor_laws, LawReport};
pub use orbit::{OrbitCategory, OrbitFunctor, OrbitMorphism};
pub use quotient::{check_equivalence, Counterexample, EquivalenceReport, OrbitPath, QuotientCategory};

/// Default cap on morphisms materialised by a single enumeration.
pub const DEFAULT_MORPHISM_BUDGET: usize = 5_000_000;

/// A functor between two (bounded) path categories.
pub trait Functor: Sync {
    type SrcObj;
    type SrcMor;
    type DstObj;
    type DstMor;

    fn map_object(&self, o: &Self::SrcObj) -> Self::DstObj;
    fn map_morphism(&self, m: &Self::SrcMor) -> Self::DstMor;
}

/// The category whose morphisms are walks of length `<= bound` in a state graph.
pub struct PathCategory<'g, P: Puzzle> {
    graph: &'g StateGraph<P>,
    bound: usize,
    budget: usize,
}

pub type Morphism<P> = Path<<P as Puzzle>::State, <P as Puzzle>::Move>;

impl<'g, P: Puzzle> PathCategory<'g, P> {
    pub fn new(graph: &'g StateGraph<P>, bound: usize) -> Self {
        PathCategory { graph, bound, budget: DEFAULT_MORPHISM_BUDGET }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn graph(&self) -> &'g StateGraph<P> {
        self.graph
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn objects(&self) -> &[P::State] {
        self.graph.vertices()
    }

    pub fn identity(&self, s: &P::State) -> Morphism<P> {
        Path::identity(s.clone())
    }

    /// `q ∘ p`, or `None` when the endpoints differ or the result exceeds the bound.
    pub fn compose(&self, q: &Morphism<P>, p: &Morphism<P>) -> Option<Morphism<P>> {
        if p.len() + q.len() > self.bound {
            return None;
        }
        p.then(q)
    }

    /// Every walk from `a` of length `<= bound`, depth-first in successor order.
    pub fn walks_from(&self, a: &P::State) -> Result<Vec<Morphism<P>>> {
        let start = self.index(a)?;
        let mut out = Vec::new();
        let mut path = Path::identity(a.clone());
        self.dfs(start, &mut path, &mut out, &|_, _| true)?;
        Ok(out)
    }

    /// `Hom(a, b)`: walks from `a` to `b` of length `<= bound`.
    pub fn hom(&self, a: &P::State, b: &P::State) -> Result<Vec<Morphism<P>>> {
        let start = self.index(a)?;
        let target = self.index(b)?;
        let to_b = self.graph.distances_to(target);
        let bound = self.bound;
        let mut all = Vec::new();
        let mut path = Path::identity(a.clone());
        self.dfs(start, &mut path, &mut all, &|v, depth| to_b[v].is_some_and(|d| depth + d <= bound))?;
        all.retain(|p| p.end() == b);
        Ok(all)
    }

    /// All morphisms of the truncated category, grouped by source object.
    pub fn all_morphisms(&self) -> Result<Vec<Morphism<P>>> {
        let per_object: Vec<Vec<Morphism<P>>> = self
            .objects()
            .par_iter()
            .map(|s| self.walks_from(s))
            .collect::<Result<_>>()?;
        let total: usize = per_object.iter().map(Vec::len).sum();
        if total > self.budget {
            return Err(Error::BudgetExceeded { what: "morphism enumeration", limit: self.budget });
        }
        Ok(per_object.into_iter().flatten().collect())
    }

    fn index(&self, s: &P::State) -> Result<usize> {
        self.graph
            .index_of(s)
            .ok_or_else(|| Error::Invalid(format!("{s} is not an object of this category")))
    }

    fn dfs(
        &self,
        at: usize,
        path: &mut Morphism<P>,
        out: &mut Vec<Morphism<P>>,
        keep: &dyn Fn(usize, usize) -> bool,
    ) -> Result<()> {
        if !keep(at, path.len()) {
            return Ok(());
        }
        if out.len() >= self.budget {
            return Err(Error::BudgetExceeded { what: "morphism enumeration", limit: self.budget });
        }
        out.push(path.clone());
        if path.len() == self.bound {
            return Ok(());
        }
        for (m, v) in self.graph.out_edges(at) {
            path.push(m.clone(), self.graph.vertex(*v).clone());
            self.dfs(*v, path, out, keep)?;
            path.steps.pop();
        }
        Ok(())
    }
}

/// `Cat_HW -> Cat_{HW/~}`: states and loads go to their canonical orbit representatives.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuotientFunctor;

impl Functor for QuotientFunctor {
    type SrcObj = HwState;
    type SrcMor = Path<HwState, HwMove>;
    type DstObj = HwState;
    type DstMor = OrbitPath;

    fn map_object(&self, o: &HwState) -> HwState {
        canonical(o)
    }

    fn map_morphism(&self, m: &Path<HwState, HwMove>) -> OrbitPath {
        m.map(canonical, canonical_move)
    }
}

/// `Cat_{HW/~} -> Cat_MC`: an orbit goes to its head counts.
#[derive(Debug, Clone, Copy, Default)]
pub struct EquivalenceFunctor;

impl Functor for EquivalenceFunctor {
    type SrcObj = HwState;
    type SrcMor = OrbitPath;
    type DstObj = McState;
    type DstMor = Path<McState, McMove>;

    fn map_object(&self, o: &HwState) -> McState {
        project(o)
    }

    fn map_morphism(&self, m: &OrbitPath) -> Path<McState, McMove> {
        m.map(project, project_move)
    }
}

/// `Cat_HW -> Cat_MC` directly.
#[derive(Debug, Clone, Copy, Default)]
pub struct ProjectionFunctor;

impl Functor for ProjectionFunctor {
    type SrcObj = HwState;
    type SrcMor = Path<HwState, HwMove>;
    type DstObj = McState;
    type DstMor = Path<McState, McMove>;

    fn map_object(&self, o: &HwState) -> McState {
        project(o)
    }

    fn map_morphism(&self, m: &Path<HwState, HwMove>) -> Path<McState, McMove> {
        m.map(project, project_move)
    }
}
