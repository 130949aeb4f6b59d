use crate::complex::{cone, direct_sum, ChainComplex, ChainMap};
use crate::dw_exact::{admissible_epi, DwSes};
use crate::linalg::ExactMatrix;

/// `X ↣ C(1_X) ↠ ΣX`, with the cone of the identity contractible.
pub fn enough_injectives(x: &ChainComplex) -> DwSes {
    let ring = x.ring();
    let c = cone(&ChainMap::identity(x));
    let sx = x.shift(1);
    let s = ChainMap::new(
        sx.clone(),
        c.complex.clone(),
        sx.degrees()
            .map(|n| (n, ExactMatrix::vstack(&[&x.identity_matrix(n - 1), &ExactMatrix::zeros(ring, x.rank(n), x.rank(n - 1))])))
            .collect(),
    )
    .expect("shapes");
    let r = ChainMap::new(
        c.complex.clone(),
        x.clone(),
        x.degrees()
            .map(|n| (n, ExactMatrix::hstack(&[&ExactMatrix::zeros(ring, x.rank(n), x.rank(n - 1)), &x.identity_matrix(n)])))
            .collect(),
    )
    .expect("shapes");
    DwSes::new(c.inclusion, c.projection, s, r).expect("cone sequence is split")
}

/// The contractible cover `P(X)` with `P(X)_n = X_n ⊕ X_{n+1}`,
/// `d(x, y) = (d x, −x − d y)`.
pub fn contractible_cover(x: &ChainComplex) -> ChainComplex {
    let ring = x.ring();
    if x.is_zero() {
        return ChainComplex::zero(ring);
    }
    let lo = x.min_degree() - 1;
    let ranks = (lo..=x.max_degree()).map(|n| x.rank(n) + x.rank(n + 1)).collect();
    let p = ChainComplex::new(
        ring,
        lo,
        ranks,
        (lo..=x.max_degree())
            .map(|n| {
                let d = ExactMatrix::blocks2(
                    &x.d(n),
                    &ExactMatrix::zeros(ring, x.rank(n - 1), x.rank(n + 1)),
                    &-&x.identity_matrix(n),
                    &-&*x.d(n + 1),
                );
                (n, d)
            })
            .collect(),
    )
    .expect("shapes");
    debug_assert!(p.validate().is_valid());
    p
}

/// `Σ⁻¹X ↣ P(X) ↠ X` with `q` the first projection.
pub fn enough_projectives(x: &ChainComplex) -> DwSes {
    let ring = x.ring();
    let p = contractible_cover(x);
    let k = x.shift(-1);
    let z = |r, c| ExactMatrix::zeros(ring, r, c);
    let q = ChainMap::new(
        p.clone(),
        x.clone(),
        p.degrees().map(|n| (n, ExactMatrix::hstack(&[&x.identity_matrix(n), &z(x.rank(n), x.rank(n + 1))]))).collect(),
    )
    .expect("shapes");
    let s = ChainMap::new(
        x.clone(),
        p.clone(),
        x.degrees().map(|n| (n, ExactMatrix::vstack(&[&x.identity_matrix(n), &z(x.rank(n + 1), x.rank(n))]))).collect(),
    )
    .expect("shapes");
    let i = ChainMap::new(
        k.clone(),
        p.clone(),
        k.degrees().map(|n| (n, ExactMatrix::vstack(&[&z(x.rank(n), x.rank(n + 1)), &x.identity_matrix(n + 1)]))).collect(),
    )
    .expect("shapes");
    let r = ChainMap::new(
        p.clone(),
        k.clone(),
        p.degrees().map(|n| (n, ExactMatrix::hstack(&[&z(x.rank(n + 1), x.rank(n)), &x.identity_matrix(n + 1)]))).collect(),
    )
    .expect("shapes");
    DwSes::new(i, q, s, r).expect("cover sequence is split")
}

/// Path object `Y → Y ⊕ P(Y) → Y ⊕ Y` with `i = (1; 0)` and
/// `p = [[1, 0], [1, q]]`.
#[derive(Clone, Debug)]
pub struct PathObject {
    pub i: ChainMap,
    pub p: ChainMap,
    /// The cover `K ↣ P(Y) ↠ Y` supplying `q`.
    pub cover: DwSes,
    /// `ker(q) → ker(p)` and its inverse, where `ker(p)` is the kernel
    /// computed by [`admissible_epi`].
    pub kernel_iso: (ChainMap, ChainMap),
}

impl PathObject {
    pub fn object(&self) -> &ChainComplex {
        self.i.target()
    }
}

pub fn path_object(y: &ChainComplex) -> PathObject {
    let cover = enough_projectives(y);
    let q = &cover.p;
    let mid = direct_sum(y, cover.middle()).expect("same ring");
    let yy = direct_sum(y, y).expect("same ring");
    let id = ChainMap::identity(y);
    let i = mid.in1.clone();
    // p = (pr1, pr1 + q pr2)
    let second = mid.pr1.try_add(&q.after(&mid.pr2)).expect("same ends");
    let p = yy.pairing(&mid.pr1, &second);
    debug_assert_eq!(p.after(&i), yy.pairing(&id, &id));
    let w = admissible_epi(&p).expect("p is split degreewise");
    let j = mid.in2.after(&cover.i);
    let phi = w.complement_splitting.after(&j);
    let psi = cover.retractions.after(&mid.pr2).after(&w.connecting);
    PathObject { i, p, cover, kernel_iso: (phi, psi) }
}
