use rand::Rng;

use crate::complex::random::{random_matrix, random_unimodular};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, ExactMatrix, Ring};

/// A finite-dimensional module over `k[ε]/(ε²)` for `k = 𝔽_p`, given by the
/// matrix of `ε` on `k^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KEpsModule {
    eps: ExactMatrix,
}

impl KEpsModule {
    pub fn new(eps: ExactMatrix) -> Result<Self> {
        if !eps.ring().is_field() {
            return Err(Error::InvalidModule(format!("coefficients must be a prime field, got {}", eps.ring())));
        }
        if eps.rows() != eps.cols() {
            return Err(Error::InvalidModule(format!("ε must be square, got {:?}", eps.shape())));
        }
        if !(&eps * &eps).is_zero() {
            return Err(Error::InvalidModule("ε² ≠ 0".into()));
        }
        Ok(KEpsModule { eps })
    }

    pub fn zero(field: Ring) -> Self {
        KEpsModule { eps: ExactMatrix::zeros(field, 0, 0) }
    }

    /// `k^a` with trivial action.
    pub fn trivial(field: Ring, a: usize) -> Self {
        KEpsModule { eps: ExactMatrix::zeros(field, a, a) }
    }

    /// `k[ε]^b` in the basis `(ε, 1)` per summand.
    pub fn free(field: Ring, b: usize) -> Self {
        Self::normal_form(field, 0, b)
    }

    /// `k^a ⊕ k[ε]^b`; each free summand contributes the block `[[0, 1], [0, 0]]`.
    pub fn normal_form(field: Ring, a: usize, b: usize) -> Self {
        let n = a + 2 * b;
        let mut eps = ExactMatrix::zeros(field, n, n);
        for j in 0..b {
            eps.set(a + 2 * j, a + 2 * j + 1, 1.into());
        }
        KEpsModule { eps }
    }

    pub fn field(&self) -> Ring {
        self.eps.ring()
    }

    pub fn dim(&self) -> usize {
        self.eps.rows()
    }

    pub fn eps(&self) -> &ExactMatrix {
        &self.eps
    }

    pub fn direct_sum(&self, other: &KEpsModule) -> Result<KEpsModule> {
        self.field().ensure_same(&other.field())?;
        Ok(KEpsModule { eps: ExactMatrix::block_diag(&self.eps, &other.eps) })
    }

    /// One representative per isomorphism class of dimension at most `max_dim`.
    pub fn isomorphism_classes(field: Ring, max_dim: usize) -> Vec<KEpsModule> {
        let mut out = Vec::new();
        for dim in 0..=max_dim {
            for b in 0..=dim / 2 {
                out.push(Self::normal_form(field, dim - 2 * b, b));
            }
        }
        out
    }
}

/// A `k[ε]`-linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KEpsHom {
    pub source: KEpsModule,
    pub target: KEpsModule,
    pub matrix: ExactMatrix,
}

impl KEpsHom {
    pub fn new(source: KEpsModule, target: KEpsModule, matrix: ExactMatrix) -> Result<Self> {
        source.field().ensure_same(&target.field())?;
        source.field().ensure_same(&matrix.ring())?;
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::Dimension(format!(
                "module map has shape {:?}, expected {:?}",
                matrix.shape(),
                (target.dim(), source.dim())
            )));
        }
        if &matrix * source.eps() != target.eps() * &matrix {
            return Err(Error::InvalidModule("map does not commute with ε".into()));
        }
        Ok(KEpsHom { source, target, matrix })
    }

    pub fn identity(m: &KEpsModule) -> Self {
        KEpsHom { source: m.clone(), target: m.clone(), matrix: ExactMatrix::identity(m.field(), m.dim()) }
    }

    pub fn zero(m: &KEpsModule, n: &KEpsModule) -> Self {
        KEpsHom { source: m.clone(), target: n.clone(), matrix: ExactMatrix::zeros(m.field(), n.dim(), m.dim()) }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &KEpsHom) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::Dimension("composition: modules do not match".into()));
        }
        Ok(KEpsHom { source: first.source.clone(), target: self.target.clone(), matrix: &self.matrix * &first.matrix })
    }

    pub fn try_sub(&self, other: &KEpsHom) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Dimension("maps have different source or target".into()));
        }
        Ok(KEpsHom { source: self.source.clone(), target: self.target.clone(), matrix: &self.matrix - &other.matrix })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.matrix.is_identity()
    }
}

/// Matrix of `X ↦ X ε_m − ε_n X` on row-major flattenings; its kernel is
/// `Hom(m, n)`.
pub(crate) fn commutation_operator(m: &KEpsModule, n: &KEpsModule) -> ExactMatrix {
    let k = m.field();
    let right = ExactMatrix::identity(k, n.dim()).kron(&m.eps().transpose());
    let left = n.eps().kron(&ExactMatrix::identity(k, m.dim()));
    &right - &left
}

/// A basis of `Hom(m, n)` as flattened columns.
pub fn hom_basis(m: &KEpsModule, n: &KEpsModule) -> Result<ExactMatrix> {
    m.field().ensure_same(&n.field())?;
    Ok(kernel_basis(&commutation_operator(m, n)))
}

pub(crate) fn hom_from_vector(m: &KEpsModule, n: &KEpsModule, v: &ExactMatrix) -> KEpsHom {
    KEpsHom { source: m.clone(), target: n.clone(), matrix: v.reshape(n.dim(), m.dim()) }
}

/// A module of dimension at most `max_dim`, the normal form in a random basis.
pub fn random_module<R: Rng + ?Sized>(rng: &mut R, field: Ring, max_dim: usize) -> KEpsModule {
    let dim = rng.gen_range(0..=max_dim);
    let b = rng.gen_range(0..=dim / 2);
    let nf = KEpsModule::normal_form(field, dim - 2 * b, b);
    let (t, t_inv) = random_unimodular(rng, field, dim);
    KEpsModule { eps: &(&t * nf.eps()) * &t_inv }
}

pub fn random_hom<R: Rng + ?Sized>(rng: &mut R, m: &KEpsModule, n: &KEpsModule) -> KEpsHom {
    let basis = hom_basis(m, n).expect("same field");
    let p = m.field().characteristic() as i64;
    let coeffs = random_matrix(rng, m.field(), basis.cols(), 1, p);
    hom_from_vector(m, n, &(&basis * &coeffs))
}
