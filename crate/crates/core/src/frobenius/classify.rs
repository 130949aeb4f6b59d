use serde::Serialize;

use crate::complex::{cone, direct_sum, ChainComplex, ChainMap, HomComplex, Homotopy};
use crate::dw_exact::{admissible_epi, admissible_mono};
use crate::error::Result;
use crate::frobenius::covers::enough_projectives;
use crate::frobenius::homotopy::is_contractible;
use crate::linalg::{solve_linear, ExactMatrix};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MapClass {
    pub is_cofibration: bool,
    pub is_trivial_cofibration: bool,
    pub is_fibration: bool,
    pub is_trivial_fibration: bool,
    pub is_weak_equivalence: bool,
}

/// A homotopy inverse `g` of `f` with `gf ≃ 1` and `fg ≃ 1`.
#[derive(Clone, Debug)]
pub struct HomotopyEquivalence {
    pub inverse: ChainMap,
    pub left: Homotopy,
    pub right: Homotopy,
}

/// Solves for `(g, h, k)` jointly: `g` a chain map `Y → X`,
/// `gf − 1 = dh + hd` and `fg − 1 = dk + kd`.
pub fn homotopy_inverse(f: &ChainMap) -> Result<Option<HomotopyEquivalence>> {
    let (x, y) = (f.source(), f.target());
    let ring = f.ring();
    let yx = HomComplex::new(y, x)?;
    let xx = HomComplex::new(x, x)?;
    let yy = HomComplex::new(y, y)?;
    let (g0, h1, k1) = (yx.dim(0), xx.dim(1), yy.dim(1));
    let z = |r, c| ExactMatrix::zeros(ring, r, c);

    let chain = yx.differential(0);
    let pre = yx.precompose_matrix(&xx, f, 0);
    let post = yx.postcompose_matrix(&yy, f, 0);
    let dxx = -&xx.differential(1);
    let dyy = -&yy.differential(1);
    let a = ExactMatrix::vstack(&[
        &ExactMatrix::hstack(&[&chain, &z(chain.rows(), h1), &z(chain.rows(), k1)]),
        &ExactMatrix::hstack(&[&pre, &dxx, &z(pre.rows(), k1)]),
        &ExactMatrix::hstack(&[&post, &z(post.rows(), h1), &dyy]),
    ]);
    let b = ExactMatrix::vstack(&[
        &z(chain.rows(), 1),
        &xx.flatten_map(&ChainMap::identity(x)),
        &yy.flatten_map(&ChainMap::identity(y)),
    ]);
    let Some(v) = solve_linear(&a, &b)? else {
        return Ok(None);
    };
    let part = |lo: usize, len: usize| v.block(lo, lo + len, 0, 1);
    let g = yx.map_from_vector(&part(0, g0));
    let gf = g.after(f);
    let fg = f.after(&g);
    let left = xx.homotopy_from_vector(&ChainMap::identity(x), &gf, &part(g0, h1))?;
    let right = yy.homotopy_from_vector(&ChainMap::identity(y), &fg, &part(g0 + h1, k1))?;
    Ok(Some(HomotopyEquivalence { inverse: g, left, right }))
}

pub fn classify(f: &ChainMap) -> MapClass {
    let mono = admissible_mono(f);
    let epi = admissible_epi(f);
    let is_cofibration = mono.is_some();
    let is_fibration = epi.is_some();
    let is_trivial_cofibration = mono.is_some_and(|w| is_contractible(&w.complement).is_some());
    let is_trivial_fibration = epi.is_some_and(|w| is_contractible(&w.complement).is_some());
    let is_weak_equivalence = homotopy_inverse(f).expect("ends of one map").is_some();
    MapClass { is_cofibration, is_trivial_cofibration, is_fibration, is_trivial_fibration, is_weak_equivalence }
}

/// `f = p ∘ i` through an intermediate complex.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub i: ChainMap,
    pub p: ChainMap,
}

impl Factorization {
    pub fn middle(&self) -> &ChainComplex {
        self.i.target()
    }
}

/// `X → X ⊕ P(Y) → Y` with `i = (1; 0)` and `p = (f, q)`.
pub fn factor_trivcof_fib(f: &ChainMap) -> Factorization {
    let cover = enough_projectives(f.target());
    let mid = direct_sum(f.source(), cover.middle()).expect("same ring");
    let p = mid.copairing(f, &cover.p);
    Factorization { i: mid.in1, p }
}

/// `X → Y ⊕ C(1_X) → Y` with `i = (f; ι)` and `p` the first projection.
pub fn factor_cof_trivfib(f: &ChainMap) -> Factorization {
    let c = cone(&ChainMap::identity(f.source()));
    let mid = direct_sum(f.target(), &c.complex).expect("same ring");
    let i = mid.pairing(f, &c.inclusion);
    Factorization { i, p: mid.pr1 }
}

/// Weak equivalence decided through the fibration `p` of
/// [`factor_trivcof_fib`]: `f` is one exactly when `ker p` is contractible.
pub fn weak_equivalence_by_kernel(f: &ChainMap) -> bool {
    let p = factor_trivcof_fib(f).p;
    let w = admissible_epi(&p).expect("p is split degreewise");
    is_contractible(&w.complement).is_some()
}
