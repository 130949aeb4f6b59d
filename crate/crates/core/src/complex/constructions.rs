use crate::complex::{ChainComplex, ChainMap};
use crate::error::Result;
use crate::linalg::ExactMatrix;

/// `X ⊕ Y` with its canonical injections and projections.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub sum: ChainComplex,
    pub in1: ChainMap,
    pub in2: ChainMap,
    pub pr1: ChainMap,
    pub pr2: ChainMap,
}

impl Biproduct {
    pub fn left(&self) -> &ChainComplex {
        self.pr1.target()
    }

    pub fn right(&self) -> &ChainComplex {
        self.pr2.target()
    }

    /// `(f; g) : W → X ⊕ Y`.
    pub fn pairing(&self, f: &ChainMap, g: &ChainMap) -> ChainMap {
        self.in1.after(f).try_add(&self.in2.after(g)).expect("maps share a source")
    }

    /// `(f g) : X ⊕ Y → W`.
    pub fn copairing(&self, f: &ChainMap, g: &ChainMap) -> ChainMap {
        f.after(&self.pr1).try_add(&g.after(&self.pr2)).expect("maps share a target")
    }
}

pub fn direct_sum(x: &ChainComplex, y: &ChainComplex) -> Result<Biproduct> {
    x.ring().ensure_same(&y.ring())?;
    let ring = x.ring();
    let degrees = ChainComplex::joint_degrees(x, y);
    let lo = *degrees.start();
    let ranks: Vec<usize> = degrees.clone().map(|n| x.rank(n) + y.rank(n)).collect();
    let sum = ChainComplex::from_fn(ring, lo, ranks, |n| ExactMatrix::block_diag(&x.d(n), &y.d(n)));
    let in1 = ChainMap::from_fn(x, &sum, |n| {
        ExactMatrix::vstack(&[&x.identity_matrix(n), &ExactMatrix::zeros(ring, y.rank(n), x.rank(n))])
    });
    let in2 = ChainMap::from_fn(y, &sum, |n| {
        ExactMatrix::vstack(&[&ExactMatrix::zeros(ring, x.rank(n), y.rank(n)), &y.identity_matrix(n)])
    });
    let pr1 = ChainMap::from_fn(&sum, x, |n| {
        ExactMatrix::hstack(&[&x.identity_matrix(n), &ExactMatrix::zeros(ring, x.rank(n), y.rank(n))])
    });
    let pr2 = ChainMap::from_fn(&sum, y, |n| {
        ExactMatrix::hstack(&[&ExactMatrix::zeros(ring, y.rank(n), x.rank(n)), &y.identity_matrix(n)])
    });
    Ok(Biproduct { sum, in1, in2, pr1, pr2 })
}

/// `f ⊕ g : X ⊕ X' → Y ⊕ Y'`.
pub fn map_sum(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
    let s = direct_sum(f.source(), g.source())?;
    let t = direct_sum(f.target(), g.target())?;
    Ok(ChainMap::from_fn(&s.sum, &t.sum, |n| ExactMatrix::block_diag(&f.component(n), &g.component(n))))
}

/// Mapping cone `C(f)` of `f : X → Y` with the maps `Y → C(f) → ΣX`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub complex: ChainComplex,
    pub inclusion: ChainMap,
    pub projection: ChainMap,
}

/// `C(f)_n = X_{n-1} ⊕ Y_n`, `d(x, y) = (−d_X x, d_Y y − f x)`.
pub fn cone(f: &ChainMap) -> Cone {
    let x = f.source();
    let y = f.target();
    let ring = f.ring();
    let sx = x.shift(1);
    let degrees = ChainComplex::joint_degrees(&sx, y);
    let lo = *degrees.start();
    let ranks: Vec<usize> = degrees.map(|n| x.rank(n - 1) + y.rank(n)).collect();
    let complex = ChainComplex::from_fn(ring, lo, ranks, |n| {
        ExactMatrix::blocks2(
            &-&*x.d(n - 1),
            &ExactMatrix::zeros(ring, x.rank(n - 2), y.rank(n)),
            &-&*f.component(n - 1),
            &y.d(n),
        )
    });
    let inclusion = ChainMap::from_fn(y, &complex, |n| {
        ExactMatrix::vstack(&[&ExactMatrix::zeros(ring, x.rank(n - 1), y.rank(n)), &y.identity_matrix(n)])
    });
    let projection = ChainMap::from_fn(&complex, &sx, |n| {
        ExactMatrix::hstack(&[&x.identity_matrix(n - 1), &ExactMatrix::zeros(ring, x.rank(n - 1), y.rank(n))])
    });
    Cone { complex, inclusion, projection }
}
