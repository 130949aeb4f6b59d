use crate::complex::{ChainComplex, ChainMap, HomComplex, Homotopy};
use crate::error::{Error, Result};
use crate::frobenius::covers::{enough_injectives, enough_projectives};
use crate::linalg::{solve_linear, ExactMatrix};

fn same_ends(f: &ChainMap, g: &ChainMap) -> Result<()> {
    f.ring().ensure_same(&g.ring())?;
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::Dimension("maps have different source or target".into()));
    }
    Ok(())
}

/// Some `h` with `d h + h d = g − f`, found by one solve in `Hom(X, Y)_1`.
pub fn find_homotopy(f: &ChainMap, g: &ChainMap) -> Result<Option<Homotopy>> {
    same_ends(f, g)?;
    let hom = HomComplex::new(f.source(), f.target())?;
    let rhs = hom.flatten_map(&g.try_sub(f)?);
    match solve_linear(&hom.differential(1), &rhs)? {
        Some(v) => Ok(Some(hom.homotopy_from_vector(f, g, &v)?)),
        None => Ok(None),
    }
}

/// A contracting homotopy `0 ≃ 1_X`, if one exists.
pub fn is_contractible(x: &ChainComplex) -> Option<Homotopy> {
    find_homotopy(&ChainMap::zero(x, x), &ChainMap::identity(x)).expect("endomorphisms of one complex")
}

/// `g − f = q ∘ β` with `q : P(Y) → Y` the contractible cover.
#[derive(Clone, Debug)]
pub struct CoverFactorization {
    pub beta: ChainMap,
    pub q: ChainMap,
}

impl CoverFactorization {
    pub fn middle(&self) -> &ChainComplex {
        self.q.source()
    }
}

/// Decides homotopy by asking whether `g − f` factors through the
/// contractible cover of the target: one solve for a chain map `β` with
/// `q β = g − f`.
pub fn homotopic_by_factorization(f: &ChainMap, g: &ChainMap) -> Result<Option<CoverFactorization>> {
    same_ends(f, g)?;
    let x = f.source();
    let cover = enough_projectives(f.target());
    let q = cover.p.clone();
    let into_cover = HomComplex::new(x, q.source())?;
    let into_target = HomComplex::new(x, f.target())?;
    let chain = into_cover.differential(0);
    let post = into_cover.postcompose_matrix(&into_target, &q, 0);
    let a = ExactMatrix::vstack(&[&chain, &post]);
    let rhs = ExactMatrix::vstack(&[
        &ExactMatrix::zeros(f.ring(), chain.rows(), 1),
        &into_target.flatten_map(&g.try_sub(f)?),
    ]);
    Ok(solve_linear(&a, &rhs)?.map(|v| CoverFactorization { beta: into_cover.map_from_vector(&v), q }))
}

/// A chain retraction of the canonical mono `X ↣ C(1_X)`, if one exists.
/// It exists exactly when `X` is injective, i.e. contractible.
pub fn injectivity_probe(x: &ChainComplex) -> Option<ChainMap> {
    let e = enough_injectives(x);
    let iota = &e.i;
    let hom = HomComplex::new(e.middle(), x).expect("same ring");
    let endo = HomComplex::new(x, x).expect("same ring");
    let chain = hom.differential(0);
    let pre = hom.precompose_matrix(&endo, iota, 0);
    let a = ExactMatrix::vstack(&[&chain, &pre]);
    let rhs = ExactMatrix::vstack(&[
        &ExactMatrix::zeros(x.ring(), chain.rows(), 1),
        &endo.flatten_map(&ChainMap::identity(x)),
    ]);
    solve_linear(&a, &rhs).expect("consistent shapes").map(|v| hom.map_from_vector(&v))
}
