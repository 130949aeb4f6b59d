use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::keps::module::{commutation_operator, hom_basis, hom_from_vector, KEpsHom, KEpsModule};
use crate::keps::structure::{decompose, free_cover};
use crate::linalg::{rank, ExactMatrix, PresentedGroup, Subquotient};

/// `Hom(m, n)` modulo the maps factoring through a free module.
#[derive(Clone, Debug)]
pub struct StableHom {
    pub group: PresentedGroup,
    pub generators: Vec<KEpsHom>,
    source: KEpsModule,
    target: KEpsModule,
    quotient: Subquotient,
}

impl StableHom {
    pub fn reduce(&self, f: &KEpsHom) -> Result<Vec<BigInt>> {
        if f.source != self.source || f.target != self.target {
            return Err(Error::Dimension("map does not belong to this stable hom group".into()));
        }
        self.quotient.reduce(&f.matrix.flatten())
    }

    pub fn element(&self, coords: &[BigInt]) -> KEpsHom {
        hom_from_vector(&self.source, &self.target, &self.quotient.element(coords))
    }
}

/// Maps factoring through a free module are exactly those factoring
/// through the free cover `F ↠ n`, so the relations are `π ∘ Hom(m, F)`.
pub fn stable_hom(m: &KEpsModule, n: &KEpsModule) -> Result<StableHom> {
    m.field().ensure_same(&n.field())?;
    let cover = free_cover(n);
    let f = &cover.p.source;
    let through = hom_basis(m, f)?;
    let post = cover.p.matrix.kron(&ExactMatrix::identity(m.field(), m.dim()));
    let quotient = Subquotient::new(&commutation_operator(m, n), &(&post * &through))?;
    let generators = (0..quotient.group.num_generators())
        .map(|i| hom_from_vector(m, n, &quotient.generator(i)))
        .collect();
    Ok(StableHom { group: quotient.group.clone(), generators, source: m.clone(), target: n.clone(), quotient })
}

/// `Ext¹(m, n) ≅ (ker ε_n / im ε_n)^a` where `a` counts the trivial summands of `m`.
pub fn ext1_keps(m: &KEpsModule, n: &KEpsModule) -> Result<PresentedGroup> {
    m.field().ensure_same(&n.field())?;
    let a = decompose(m).a;
    let homology = n.dim() - 2 * rank(n.eps());
    Ok(PresentedGroup::free(m.field(), a * homology))
}

/// `Ext¹(m, n)` as `coker(Hom(F, n) → Hom(K, n))` for the free cover
/// `K ↣ F ↠ m`; frees are injective, so this needs no closed form.
pub fn ext1_via_cover(m: &KEpsModule, n: &KEpsModule) -> Result<PresentedGroup> {
    m.field().ensure_same(&n.field())?;
    let cover = free_cover(m);
    let (kmod, f) = (&cover.i.source, &cover.i.target);
    let hk = hom_basis(kmod, n)?;
    let hf = hom_basis(f, n)?;
    // h ↦ h ∘ i on flattenings, expressed in the basis of Hom(K, n).
    let pre = ExactMatrix::identity(m.field(), n.dim()).kron(&cover.i.matrix.transpose());
    let restricted = &pre * &hf;
    let dim = hk.cols() - rank(&restricted);
    Ok(PresentedGroup::free(m.field(), dim))
}
