use std::borrow::Cow;
use std::fmt;

use crate::complex::{ChainComplex, Validity};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Ring};

/// A family `f_n : X_n → Y_n` of matrices, indexed over the source's degrees.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    // components[k] = f_{source.min_degree() + k}
    components: Vec<ExactMatrix>,
}

impl ChainMap {
    /// Shape-checked construction; unlisted components are zero. The chain
    /// condition is left to [`validate`](Self::validate).
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: Vec<(i64, ExactMatrix)>,
    ) -> Result<Self> {
        source.ring().ensure_same(&target.ring())?;
        let mut comps: Vec<ExactMatrix> = source
            .degrees()
            .map(|n| ExactMatrix::zeros(source.ring(), target.rank(n), source.rank(n)))
            .collect();
        for (n, m) in components {
            source.ring().ensure_same(&m.ring())?;
            let expected = (target.rank(n), source.rank(n));
            if m.shape() != expected {
                return Err(Error::InvalidMap {
                    degree: n,
                    reason: format!("component has shape {:?}, expected {:?}", m.shape(), expected),
                });
            }
            if source.degrees().contains(&n) {
                comps[(n - source.min_degree()) as usize] = m;
            }
        }
        Ok(ChainMap { source, target, components: comps })
    }

    pub fn checked(
        source: ChainComplex,
        target: ChainComplex,
        components: Vec<(i64, ExactMatrix)>,
    ) -> Result<Self> {
        let f = Self::new(source, target, components)?;
        match f.validate() {
            Validity::Valid => Ok(f),
            Validity::Invalid { degree, reason } => Err(Error::InvalidMap { degree, reason }),
        }
    }

    pub(crate) fn from_fn(
        source: &ChainComplex,
        target: &ChainComplex,
        mut f: impl FnMut(i64) -> ExactMatrix,
    ) -> Self {
        let components: Vec<ExactMatrix> = source.degrees().map(&mut f).collect();
        let m = ChainMap { source: source.clone(), target: target.clone(), components };
        debug_assert!(m.shapes_ok(), "constructed map has inconsistent shapes");
        m
    }

    fn shapes_ok(&self) -> bool {
        self.source
            .degrees()
            .all(|n| self.component(n).shape() == (self.target.rank(n), self.source.rank(n)))
    }

    pub fn identity(x: &ChainComplex) -> Self {
        Self::from_fn(x, x, |n| x.identity_matrix(n))
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        Self::from_fn(source, target, |n| {
            ExactMatrix::zeros(source.ring(), target.rank(n), source.rank(n))
        })
    }

    /// `c · 1_X`.
    pub fn scalar(x: &ChainComplex, c: i64) -> Self {
        let c = x.ring().from_i64(c);
        Self::from_fn(x, x, |n| x.identity_matrix(n).scale(&c))
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn ring(&self) -> Ring {
        self.source.ring()
    }

    pub fn component(&self, n: i64) -> Cow<'_, ExactMatrix> {
        let k = n - self.source.min_degree();
        if !self.source.is_zero() && k >= 0 && (k as usize) < self.components.len() {
            Cow::Borrowed(&self.components[k as usize])
        } else {
            Cow::Owned(ExactMatrix::zeros(self.ring(), self.target.rank(n), self.source.rank(n)))
        }
    }

    /// Checks `d_Y f_n = f_{n-1} d_X` in every degree.
    pub fn validate(&self) -> Validity {
        if !self.shapes_ok() {
            return Validity::Invalid { degree: self.source.min_degree(), reason: "component shape".into() };
        }
        for n in ChainComplex::joint_degrees(&self.source, &self.target) {
            let lhs = &*self.target.d(n) * &*self.component(n);
            let rhs = &*self.component(n - 1) * &*self.source.d(n);
            if lhs != rhs {
                return Validity::Invalid { degree: n, reason: "d f ≠ f d".into() };
            }
        }
        Validity::Valid
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ExactMatrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.components.iter().all(ExactMatrix::is_identity)
    }

    fn same_ends(&self, other: &ChainMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Dimension("maps have different source or target".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ChainMap) -> Result<Self> {
        self.same_ends(other)?;
        Ok(Self::from_fn(&self.source, &self.target, |n| &*self.component(n) + &*other.component(n)))
    }

    pub fn try_sub(&self, other: &ChainMap) -> Result<Self> {
        self.same_ends(other)?;
        Ok(Self::from_fn(&self.source, &self.target, |n| &*self.component(n) - &*other.component(n)))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(&self.source, &self.target, |n| -&*self.component(n))
    }

    /// `self ∘ first` (apply `first`, then `self`).
    pub fn try_after(&self, first: &ChainMap) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::Dimension("composition: target of the first map is not the source of the second".into()));
        }
        Ok(Self::from_fn(&first.source, &self.target, |n| &*self.component(n) * &*first.component(n)))
    }

    /// `self ∘ first`, panicking on mismatched ends.
    pub fn after(&self, first: &ChainMap) -> Self {
        self.try_after(first).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `Σ^k f`, with `(Σ^k f)_n = f_{n-k}`.
    pub fn shift(&self, k: i64) -> Self {
        let s = self.source.shift(k);
        let t = self.target.shift(k);
        Self::from_fn(&s, &t, |n| self.component(n - k).into_owned())
    }
}

impl fmt::Debug for ChainMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainMap {{ {:?} -> {:?};", self.source, self.target)?;
        for n in self.source.degrees() {
            write!(f, " f{n}={}", self.component(n))?;
        }
        write!(f, " }}")
    }
}

/// A chain homotopy `h_n : X_n → Y_{n+1}` from `f` to `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy {
    pub f: ChainMap,
    pub g: ChainMap,
    components: Vec<(i64, ExactMatrix)>,
}

impl Homotopy {
    /// Requires `d h + h d = g − f` in every degree.
    pub fn new(f: ChainMap, g: ChainMap, components: Vec<(i64, ExactMatrix)>) -> Result<Self> {
        f.same_ends(&g)?;
        let x = f.source();
        let y = f.target();
        let mut comps = Vec::new();
        for n in x.degrees() {
            let h = components
                .iter()
                .find(|(m, _)| *m == n)
                .map(|(_, h)| h.clone())
                .unwrap_or_else(|| ExactMatrix::zeros(x.ring(), y.rank(n + 1), x.rank(n)));
            if h.shape() != (y.rank(n + 1), x.rank(n)) {
                return Err(Error::InvalidWitness(format!("homotopy component {n} has shape {:?}", h.shape())));
            }
            comps.push((n, h));
        }
        let h = Homotopy { f, g, components: comps };
        match h.verify() {
            Validity::Valid => Ok(h),
            Validity::Invalid { reason, .. } => Err(Error::InvalidWitness(reason)),
        }
    }

    pub fn component(&self, n: i64) -> ExactMatrix {
        self.components
            .iter()
            .find(|(m, _)| *m == n)
            .map(|(_, h)| h.clone())
            .unwrap_or_else(|| {
                ExactMatrix::zeros(self.f.ring(), self.f.target().rank(n + 1), self.f.source().rank(n))
            })
    }

    pub fn components(&self) -> &[(i64, ExactMatrix)] {
        &self.components
    }

    /// Re-checks `d_{n+1} h_n + h_{n-1} d_n = g_n − f_n` exactly.
    pub fn verify(&self) -> Validity {
        let x = self.f.source();
        let y = self.f.target();
        for n in x.degrees() {
            let lhs = &(&*y.d(n + 1) * &self.component(n)) + &(&self.component(n - 1) * &*x.d(n));
            let rhs = &*self.g.component(n) - &*self.f.component(n);
            if lhs != rhs {
                return Validity::Invalid { degree: n, reason: format!("dh + hd ≠ g − f in degree {n}") };
            }
        }
        Validity::Valid
    }
}
