//! Functor-law and associativity checks over truncated path categories.
//!
//! A composable pair `(p, q)` whose composite fits the bound is exactly a
//! walk of length `<= L` cut at one point, and a composable triple is a walk
//! cut at two points. Enumerating walks and their cut points therefore covers
//! every pair and triple that is defined at the bound, each exactly once.

use rayon::prelude::*;
use serde::Serialize;

use super::Functor;
use crate::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }

    fn merge(law: &str, parts: impl IntoIterator<Item = (usize, usize, Option<String>)>) -> LawReport {
        let mut r = LawReport { law: law.to_string(), checked: 0, failures: 0, first_failure: None };
        for (c, f, first) in parts {
            r.checked += c;
            r.failures += f;
            if r.first_failure.is_none() {
                r.first_failure = first;
            }
        }
        r
    }
}

fn segment<S: Clone, M: Clone>(w: &Path<S, M>, i: usize, j: usize) -> Path<S, M> {
    w.suffix(i).prefix(j - i)
}

/// `F(id_x) = id_{F(x)}` for every object, and `F(q ∘ p) = F(q) ∘ F(p)`
/// for every cut of every morphism.
pub fn check_functor_laws<F, S1, M1, S2, M2>(
    name: &str,
    functor: &F,
    objects: &[S1],
    morphisms: &[Path<S1, M1>],
) -> (LawReport, LawReport)
where
    F: Functor<SrcObj = S1, SrcMor = Path<S1, M1>, DstObj = S2, DstMor = Path<S2, M2>>,
    S1: Clone + Sync + std::fmt::Display,
    M1: Clone + Sync,
    S2: Clone + PartialEq + Send + std::fmt::Debug,
    M2: Clone + PartialEq + Send + std::fmt::Debug,
{
    let identity = LawReport::merge(
        &format!("{name}: identity"),
        objects.par_iter().map(|x| {
            let ok = functor.map_morphism(&Path::identity(x.clone())) == Path::identity(functor.map_object(x));
            (1, usize::from(!ok), (!ok).then(|| format!("F(id) != id at {x}")))
        }).collect::<Vec<_>>(),
    );
    let composition = LawReport::merge(
        &format!("{name}: composition"),
        morphisms.par_iter().map(|w| {
            let whole = functor.map_morphism(w);
            let mut failures = 0;
            let mut first = None;
            for i in 0..=w.len() {
                let fp = functor.map_morphism(&w.prefix(i));
                let fq = functor.map_morphism(&w.suffix(i));
                if fp.then(&fq).as_ref() != Some(&whole) {
                    failures += 1;
                    first.get_or_insert_with(|| format!("F(q∘p) != F(q)∘F(p) cutting a walk from {} at {i}", w.start));
                }
            }
            (w.len() + 1, failures, first)
        }).collect::<Vec<_>>(),
    );
    (identity, composition)
}

/// `compose(q, p) = q ∘ p`, or `None` where undefined.
pub type ComposeFn<'a, S, M> = dyn Fn(&Path<S, M>, &Path<S, M>) -> Option<Path<S, M>> + Sync + 'a;

/// `(r ∘ q) ∘ p = r ∘ (q ∘ p)` for every double cut of morphisms of length
/// `<= max_len`, using `compose(q, p) = q ∘ p`.
pub fn check_associativity<S, M>(
    name: &str,
    morphisms: &[Path<S, M>],
    max_len: usize,
    compose: &ComposeFn<'_, S, M>,
) -> LawReport
where
    S: Clone + PartialEq + Sync + std::fmt::Display,
    M: Clone + PartialEq + Sync,
{
    LawReport::merge(
        &format!("{name}: associativity"),
        morphisms
            .par_iter()
            .filter(|w| w.len() <= max_len)
            .map(|w| {
                let mut checked = 0;
                let mut failures = 0;
                let mut first = None;
                for i in 0..=w.len() {
                    for j in i..=w.len() {
                        let p = w.prefix(i);
                        let q = segment(w, i, j);
                        let r = w.suffix(j);
                        let left = compose(&r, &q).and_then(|rq| compose(&rq, &p));
                        let right = compose(&q, &p).and_then(|qp| compose(&r, &qp));
                        checked += 1;
                        if left.is_none() || left != right || left.as_ref() != Some(w) {
                            failures += 1;
                            first.get_or_insert_with(|| format!("associativity fails on a walk from {} cut at {i},{j}", w.start));
                        }
                    }
                }
                (checked, failures, first)
            })
            .collect::<Vec<_>>(),
    )
}
