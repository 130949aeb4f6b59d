use std::fmt::Debug;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::complex::random::{random_chain_map, random_complex, random_isomorphic, SampleBounds};
use crate::complex::{cone, direct_sum, ChainComplex, ChainMap};
use crate::dw_exact::{admissible_epi, admissible_mono, sample::random_ses};
use crate::frobenius::{ext_dw, factor_trivcof_fib, is_contractible};
use crate::hovey::classes::Class;
use crate::keps::{
    cokernel, ext1_keps, free_cover, free_envelope, is_free, kernel, random_extension, random_hom, random_module,
    KEpsHom, KEpsModule,
};
use crate::linalg::{rank, ExactMatrix, PresentedGroup, Ring};

/// A sampled short exact sequence `sub ↣ middle ↠ quotient`.
#[derive(Clone, Debug)]
pub struct SampledSes<O, M> {
    pub sub: O,
    pub middle: O,
    pub quotient: O,
    pub i: M,
    pub p: M,
}

/// What the checks need from an exact category.
pub trait ExactInstance {
    type Object: Clone + Debug + PartialEq + Send + Sync + 'static;
    type Map: Clone + Debug + 'static;

    fn name(&self) -> String;
    fn sample_object(&self, rng: &mut ChaCha8Rng) -> Self::Object;
    fn sample_map(&self, rng: &mut ChaCha8Rng, x: &Self::Object, y: &Self::Object) -> Self::Map;
    /// A random sequence, with the end terms fixed when given.
    fn sample_ses(
        &self,
        rng: &mut ChaCha8Rng,
        sub: Option<&Self::Object>,
        quotient: Option<&Self::Object>,
    ) -> SampledSes<Self::Object, Self::Map>;
    fn ext1(&self, x: &Self::Object, y: &Self::Object) -> PresentedGroup;
    /// The cokernel if `f` is an admissible mono.
    fn cokernel_of_mono(&self, f: &Self::Map) -> Option<Self::Object>;
    /// The kernel if `f` is an admissible epi.
    fn kernel_of_epi(&self, f: &Self::Map) -> Option<Self::Object>;
    fn direct_sum(&self, x: &Self::Object, y: &Self::Object) -> Self::Object;
    /// `f = p ∘ i` with `i` a trivial cofibration of the instance's own model structure.
    fn factor_trivcof_fib(&self, f: &Self::Map) -> (Self::Map, Self::Map);
    /// Objects likely to have nonzero `Ext¹` with `x` on either side.
    fn witness_candidates(&self, x: &Self::Object) -> Vec<Self::Object>;
    fn is_projective(&self, x: &Self::Object) -> bool;
    /// Both bundled instances are Frobenius, so injectives default to projectives.
    fn is_injective(&self, x: &Self::Object) -> bool {
        self.is_projective(x)
    }
}

/// Bounded complexes with the degreewise split structure.
#[derive(Clone, Debug)]
pub struct ChainInstance {
    pub bounds: SampleBounds,
}

impl ChainInstance {
    pub fn new(ring: Ring) -> Self {
        ChainInstance { bounds: SampleBounds::new(ring) }
    }

    pub fn all(&self) -> Class<ChainComplex> {
        Class::all()
    }

    /// Contractible complexes, sampled as cones of identities in a random basis.
    pub fn contractibles(&self) -> Class<ChainComplex> {
        let b = self.bounds;
        Class::with_sampler(
            "contractible",
            |x: &ChainComplex| is_contractible(x).is_some(),
            move |rng: &mut ChaCha8Rng| {
                let x = random_complex(rng, &b);
                random_isomorphic(rng, &cone(&ChainMap::identity(&x)).complex).0
            },
        )
    }
}

impl ExactInstance for ChainInstance {
    type Object = ChainComplex;
    type Map = ChainMap;

    fn name(&self) -> String {
        format!("chain complexes over {}", self.bounds.ring)
    }

    fn sample_object(&self, rng: &mut ChaCha8Rng) -> ChainComplex {
        let x = random_complex(rng, &self.bounds);
        // Mix in contractible objects so that W-filtered sampling terminates.
        if rng.gen_bool(0.25) {
            cone(&ChainMap::identity(&x)).complex
        } else {
            x
        }
    }

    fn sample_map(&self, rng: &mut ChaCha8Rng, x: &ChainComplex, y: &ChainComplex) -> ChainMap {
        random_chain_map(rng, x, y)
    }

    fn sample_ses(
        &self,
        rng: &mut ChaCha8Rng,
        sub: Option<&ChainComplex>,
        quotient: Option<&ChainComplex>,
    ) -> SampledSes<ChainComplex, ChainMap> {
        let e = random_ses(rng, &self.bounds, sub, quotient);
        SampledSes {
            sub: e.sub().clone(),
            middle: e.middle().clone(),
            quotient: e.quotient().clone(),
            i: e.i,
            p: e.p,
        }
    }

    fn ext1(&self, x: &ChainComplex, y: &ChainComplex) -> PresentedGroup {
        ext_dw(1, x, y).expect("degree 1, one ring")
    }

    fn cokernel_of_mono(&self, f: &ChainMap) -> Option<ChainComplex> {
        admissible_mono(f).map(|w| w.complement)
    }

    fn kernel_of_epi(&self, f: &ChainMap) -> Option<ChainComplex> {
        admissible_epi(f).map(|w| w.complement)
    }

    fn direct_sum(&self, x: &ChainComplex, y: &ChainComplex) -> ChainComplex {
        direct_sum(x, y).expect("one ring").sum
    }

    fn factor_trivcof_fib(&self, f: &ChainMap) -> (ChainMap, ChainMap) {
        let fac = factor_trivcof_fib(f);
        (fac.i, fac.p)
    }

    fn witness_candidates(&self, x: &ChainComplex) -> Vec<ChainComplex> {
        vec![x.shift(1), x.shift(-1), x.clone()]
    }

    fn is_projective(&self, x: &ChainComplex) -> bool {
        is_contractible(x).is_some()
    }
}

/// Finite-dimensional `k[ε]`-modules with all short exact sequences.
#[derive(Clone, Debug)]
pub struct KEpsInstance {
    pub field: Ring,
    pub max_dim: usize,
}

impl KEpsInstance {
    pub fn new(field: Ring) -> Self {
        KEpsInstance { field, max_dim: 4 }
    }

    pub fn all(&self) -> Class<KEpsModule> {
        Class::all()
    }

    pub fn frees(&self) -> Class<KEpsModule> {
        let (field, max) = (self.field, self.max_dim);
        Class::with_sampler("free", is_free, move |rng: &mut ChaCha8Rng| {
            let b = rng.gen_range(0..=max / 2);
            let m = KEpsModule::free(field, b);
            let (t, t_inv) = crate::complex::random::random_unimodular(rng, field, m.dim());
            KEpsModule::new(&(&t * m.eps()) * &t_inv).expect("conjugate of a module")
        })
    }
}

impl ExactInstance for KEpsInstance {
    type Object = KEpsModule;
    type Map = KEpsHom;

    fn name(&self) -> String {
        format!("k[ε]-modules over {}", self.field)
    }

    fn sample_object(&self, rng: &mut ChaCha8Rng) -> KEpsModule {
        random_module(rng, self.field, self.max_dim)
    }

    fn sample_map(&self, rng: &mut ChaCha8Rng, x: &KEpsModule, y: &KEpsModule) -> KEpsHom {
        random_hom(rng, x, y)
    }

    fn sample_ses(
        &self,
        rng: &mut ChaCha8Rng,
        sub: Option<&KEpsModule>,
        quotient: Option<&KEpsModule>,
    ) -> SampledSes<KEpsModule, KEpsHom> {
        let a = sub.cloned().unwrap_or_else(|| self.sample_object(rng));
        let c = quotient.cloned().unwrap_or_else(|| self.sample_object(rng));
        let e = random_extension(rng, &a, &c).expect("one field");
        SampledSes { sub: a, middle: e.i.target.clone(), quotient: c, i: e.i, p: e.p }
    }

    fn ext1(&self, x: &KEpsModule, y: &KEpsModule) -> PresentedGroup {
        ext1_keps(x, y).expect("one field")
    }

    fn cokernel_of_mono(&self, f: &KEpsHom) -> Option<KEpsModule> {
        (rank(&f.matrix) == f.source.dim()).then(|| cokernel(f).target)
    }

    fn kernel_of_epi(&self, f: &KEpsHom) -> Option<KEpsModule> {
        (rank(&f.matrix) == f.target.dim()).then(|| kernel(f).source)
    }

    fn direct_sum(&self, x: &KEpsModule, y: &KEpsModule) -> KEpsModule {
        x.direct_sum(y).expect("one field")
    }

    /// `m → m ⊕ F(n) → n` with `i = (1; 0)` and `p = (f, π)`.
    fn factor_trivcof_fib(&self, f: &KEpsHom) -> (KEpsHom, KEpsHom) {
        let (m, n) = (&f.source, &f.target);
        let cover = free_cover(n);
        let fr = &cover.p.source;
        let mid = m.direct_sum(fr).expect("one field");
        let k = self.field;
        let i = ExactMatrix::vstack(&[&ExactMatrix::identity(k, m.dim()), &ExactMatrix::zeros(k, fr.dim(), m.dim())]);
        let p = ExactMatrix::hstack(&[&f.matrix, &cover.p.matrix]);
        (
            KEpsHom::new(m.clone(), mid.clone(), i).expect("inclusion"),
            KEpsHom::new(mid, n.clone(), p).expect("copairing"),
        )
    }

    fn witness_candidates(&self, x: &KEpsModule) -> Vec<KEpsModule> {
        vec![
            KEpsModule::trivial(self.field, 1),
            x.clone(),
            free_cover(x).i.source,
            free_envelope(x).p.target,
        ]
    }

    fn is_projective(&self, x: &KEpsModule) -> bool {
        is_free(x)
    }
}
