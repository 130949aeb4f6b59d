use crate::complex::{direct_sum, ChainMap, Validity};
use crate::dw_exact::{admissible_mono, DwSes};
use crate::error::{Error, Result};

/// A degreewise-split mono `f : X → Y` completed to a split sequence.
#[derive(Clone, Debug)]
pub struct SplitMonoCokernel {
    pub ses: DwSes,
    /// When the given left inverse is a chain map: the isomorphism
    /// `Y → X ⊕ Z` given by `(r; p)`, and its inverse `(f s)`. It carries
    /// `f` to the canonical injection and `p` to the canonical projection.
    pub middle_iso: Option<(ChainMap, ChainMap)>,
    pub canonical: DwSes,
}

/// Completes `f` with the given degreewise left inverse to `X ↣ Y ↠ Z`.
pub fn split_mono_cokernel(f: &ChainMap, left_inverse: &ChainMap) -> Result<SplitMonoCokernel> {
    if left_inverse.source() != f.target() || left_inverse.target() != f.source() {
        return Err(Error::InvalidWitness("left inverse has the wrong source or target".into()));
    }
    for n in f.source().degrees() {
        if !(&*left_inverse.component(n) * &*f.component(n)).is_identity() {
            return Err(Error::InvalidWitness(format!("r ∘ f ≠ 1 in degree {n}")));
        }
    }
    let w = admissible_mono(f).ok_or_else(|| Error::InvalidWitness("map is not split injective".into()))?;
    let computed = w.ses();
    // Keep the caller's retraction; recompute the complement for it.
    let (ses, canonical) = rebuild_with_retraction(&computed, left_inverse)?;
    let middle_iso = if left_inverse.validate().is_valid() && ses.sections.validate().is_valid() {
        let sum = direct_sum(ses.sub(), ses.quotient())?;
        let to = sum.pairing(&ses.retractions, &ses.p);
        let from = sum.copairing(&ses.i, &ses.sections);
        Some((to, from))
    } else {
        None
    };
    Ok(SplitMonoCokernel { ses, middle_iso, canonical })
}

fn rebuild_with_retraction(ses: &DwSes, r: &ChainMap) -> Result<(DwSes, DwSes)> {
    // With i r + s p = 1 for the computed r, the new sections are
    // s' = (1 − i r') s and p is unchanged; p s' = p s = 1.
    let b = ses.middle();
    let s_new = ChainMap::new(
        ses.quotient().clone(),
        b.clone(),
        ses.quotient()
            .degrees()
            .map(|n| {
                let proj = &b.identity_matrix(n) - &(&*ses.i.component(n) * &*r.component(n));
                (n, &proj * &*ses.sections.component(n))
            })
            .collect(),
    )?;
    let out = DwSes::new(ses.i.clone(), ses.p.clone(), s_new, r.clone())?;
    let canonical = DwSes::split(ses.sub(), ses.quotient())?;
    Ok((out, canonical))
}

/// The sequence `A --(1; −g)--> A ⊕ C --(g 1)--> C` together with the middle
/// isomorphism `[[1, 0], [g, 1]]` onto the canonical split sequence and its
/// inverse `[[1, 0], [−g, 1]]`.
#[derive(Clone, Debug)]
pub struct GraphSplitting {
    pub mono: ChainMap,
    pub epi: ChainMap,
    pub iso: ChainMap,
    pub iso_inverse: ChainMap,
    pub canonical: DwSes,
}

pub fn graph_splitting(g: &ChainMap) -> Result<GraphSplitting> {
    let a = g.source();
    let c = g.target();
    let sum = direct_sum(a, c)?;
    let id_a = ChainMap::identity(a);
    let id_c = ChainMap::identity(c);
    let mono = sum.pairing(&id_a, &g.neg());
    let epi = sum.copairing(g, &id_c);
    // [[1, 0], [g, 1]] = in1 ∘ pr1 + in2 ∘ (g pr1 + pr2)
    let iso = sum.pairing(&sum.pr1, &sum.copairing(g, &id_c));
    let iso_inverse = sum.pairing(&sum.pr1, &sum.copairing(&g.neg(), &id_c));
    let canonical = DwSes::split(a, c)?;
    Ok(GraphSplitting { mono, epi, iso, iso_inverse, canonical })
}

/// The commuting diagram exhibiting `j : A → B` as a retract of `i : X → Y`:
///
/// ```text
///   A --f1--> X --g1--> A
///   |j        |i        |j
///   B --f2--> Y --g2--> B
/// ```
#[derive(Clone, Debug)]
pub struct RetractDiagram {
    pub j: ChainMap,
    pub i: ChainMap,
    pub f1: ChainMap,
    pub g1: ChainMap,
    pub f2: ChainMap,
    pub g2: ChainMap,
}

impl RetractDiagram {
    /// The six identities, by name: both retractions, both squares, and
    /// that the bottom row consists of chain maps.
    pub fn identities(&self) -> Vec<(&'static str, bool)> {
        let eq = |a: Result<ChainMap>, b: Result<ChainMap>| matches!((a, b), (Ok(x), Ok(y)) if x == y);
        vec![
            ("g1 f1 = 1", self.g1.try_after(&self.f1).is_ok_and(|m| m.is_identity())),
            ("g2 f2 = 1", self.g2.try_after(&self.f2).is_ok_and(|m| m.is_identity())),
            ("i f1 = f2 j", eq(self.i.try_after(&self.f1), self.f2.try_after(&self.j))),
            ("j g1 = g2 i", eq(self.j.try_after(&self.g1), self.g2.try_after(&self.i))),
            ("f2 chain map", self.f2.validate().is_valid()),
            ("g2 chain map", self.g2.validate().is_valid()),
        ]
    }

    pub fn commutes(&self) -> bool {
        self.identities().iter().all(|(_, ok)| *ok)
    }
}

/// For `f : A → C` with `g f = 1`, the diagram with rows `A = A = A` and
/// `C --(g; −1)--> A ⊕ C --(f, fg − 1)--> C` showing `f` as a retract of
/// the admissible mono `(1; −f)`.
pub fn retract_embedding(f: &ChainMap, g: &ChainMap) -> Result<RetractDiagram> {
    let gf = g.try_after(f)?;
    if !gf.is_identity() {
        return Err(Error::InvalidWitness("g ∘ f ≠ 1".into()));
    }
    let a = f.source();
    let c = f.target();
    let sum = direct_sum(a, c)?;
    let id_a = ChainMap::identity(a);
    let id_c = ChainMap::identity(c);
    let middle = sum.pairing(&id_a, &f.neg());
    let f2 = sum.pairing(g, &id_c.neg());
    let fg_minus_1 = f.after(g).try_sub(&id_c)?;
    let g2 = sum.copairing(f, &fg_minus_1);
    let d = RetractDiagram { j: f.clone(), i: middle, f1: id_a.clone(), g1: id_a, f2, g2 };
    if let Some((name, _)) = d.identities().into_iter().find(|(_, ok)| !ok) {
        return Err(Error::InvalidWitness(format!("retract diagram fails: {name}")));
    }
    Ok(d)
}

/// Validity of a chain-level retraction witness, used by callers that
/// construct diagrams by hand.
pub fn is_chain_retraction(f: &ChainMap, g: &ChainMap) -> bool {
    f.validate() == Validity::Valid
        && g.validate() == Validity::Valid
        && g.try_after(f).is_ok_and(|m| m.is_identity())
}
