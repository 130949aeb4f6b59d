use std::borrow::Cow;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, PresentedGroup, Ring, Subquotient};

/// A bounded chain complex of finitely generated free modules.
///
/// `d(n) : X_n → X_{n-1}` is a `rank(n-1) × rank(n)` matrix. The stored
/// degree range is trimmed so that the extreme degrees have nonzero rank;
/// the zero complex has an empty range. Two complexes compare equal only
/// if ranges, ranks and every differential entry agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    ring: Ring,
    min_degree: i64,
    ranks: Vec<usize>,
    // diffs[k] = d_{min_degree + k}
    diffs: Vec<ExactMatrix>,
}

/// Outcome of [`ChainComplex::validate`] and the other verdict-valued checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid { degree: i64, reason: String },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

impl ChainComplex {
    pub fn zero(ring: Ring) -> Self {
        ChainComplex { ring, min_degree: 0, ranks: Vec::new(), diffs: Vec::new() }
    }

    /// Build from ranks starting at `min_degree` and the listed differentials
    /// (`(n, d_n)`); unlisted differentials are zero. Shapes are checked here,
    /// `d² = 0` is left to [`validate`](Self::validate).
    pub fn new(
        ring: Ring,
        min_degree: i64,
        ranks: Vec<usize>,
        differentials: Vec<(i64, ExactMatrix)>,
    ) -> Result<Self> {
        let rank_at = |n: i64| -> usize {
            let k = n - min_degree;
            if k < 0 || k as usize >= ranks.len() { 0 } else { ranks[k as usize] }
        };
        let mut diffs: Vec<ExactMatrix> = (0..ranks.len() as i64)
            .map(|k| {
                let n = min_degree + k;
                ExactMatrix::zeros(ring, rank_at(n - 1), rank_at(n))
            })
            .collect();
        for (n, d) in differentials {
            ring.ensure_same(&d.ring())?;
            let expected = (rank_at(n - 1), rank_at(n));
            if d.shape() != expected {
                return Err(Error::InvalidComplex {
                    degree: n,
                    reason: format!("differential has shape {:?}, expected {:?}", d.shape(), expected),
                });
            }
            let k = n - min_degree;
            if k >= 0 && (k as usize) < diffs.len() {
                diffs[k as usize] = d;
            }
        }
        Ok(ChainComplex { ring, min_degree, ranks, diffs }.trimmed())
    }

    /// Like [`new`](Self::new) but also rejects complexes with `d² ≠ 0`.
    pub fn checked(
        ring: Ring,
        min_degree: i64,
        ranks: Vec<usize>,
        differentials: Vec<(i64, ExactMatrix)>,
    ) -> Result<Self> {
        let x = Self::new(ring, min_degree, ranks, differentials)?;
        match x.validate() {
            Validity::Valid => Ok(x),
            Validity::Invalid { degree, reason } => Err(Error::InvalidComplex { degree, reason }),
        }
    }

    /// Build over a degree range from a closure giving `d_n`.
    pub(crate) fn from_fn(
        ring: Ring,
        min_degree: i64,
        ranks: Vec<usize>,
        mut d: impl FnMut(i64) -> ExactMatrix,
    ) -> Self {
        let diffs = (0..ranks.len() as i64).map(|k| d(min_degree + k)).collect();
        let x = ChainComplex { ring, min_degree, ranks, diffs }.trimmed();
        debug_assert!(x.shapes_ok(), "constructed complex has inconsistent shapes");
        x
    }

    fn shapes_ok(&self) -> bool {
        self.degrees().all(|n| self.d(n).shape() == (self.rank(n - 1), self.rank(n)))
    }

    fn trimmed(mut self) -> Self {
        let lead = self.ranks.iter().take_while(|&&r| r == 0).count();
        if lead == self.ranks.len() {
            return ChainComplex::zero(self.ring);
        }
        let trail = self.ranks.iter().rev().take_while(|&&r| r == 0).count();
        let keep = self.ranks.len() - lead - trail;
        self.ranks = self.ranks[lead..lead + keep].to_vec();
        self.diffs = self.diffs[lead..lead + keep].to_vec();
        self.min_degree += lead as i64;
        // The lowest stored differential must map to zero.
        let r0 = self.ranks[0];
        self.diffs[0] = ExactMatrix::zeros(self.ring, 0, r0);
        self
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Largest degree with nonzero rank; `min_degree - 1` for the zero complex.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.min_degree..=self.max_degree()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: i64) -> usize {
        let k = n - self.min_degree;
        if k < 0 || k as usize >= self.ranks.len() { 0 } else { self.ranks[k as usize] }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn d(&self, n: i64) -> Cow<'_, ExactMatrix> {
        let k = n - self.min_degree;
        if k >= 0 && (k as usize) < self.diffs.len() {
            Cow::Borrowed(&self.diffs[k as usize])
        } else {
            Cow::Owned(ExactMatrix::zeros(self.ring, self.rank(n - 1), self.rank(n)))
        }
    }

    pub fn identity_matrix(&self, n: i64) -> ExactMatrix {
        ExactMatrix::identity(self.ring, self.rank(n))
    }

    /// Confirms `d_{n-1} ∘ d_n = 0` everywhere; reports the first failing degree
    /// (the degree `n` of the inner differential).
    pub fn validate(&self) -> Validity {
        for n in self.degrees() {
            if self.d(n).shape() != (self.rank(n - 1), self.rank(n)) {
                return Validity::Invalid { degree: n, reason: "differential shape".into() };
            }
            if !(&*self.d(n - 1) * &*self.d(n)).is_zero() {
                return Validity::Invalid { degree: n, reason: "d ∘ d ≠ 0".into() };
            }
        }
        Validity::Valid
    }

    /// `Σ^k X`: `(Σ^k X)_n = X_{n-k}` with differential multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        let diffs = self
            .diffs
            .iter()
            .map(|d| if sign == 1 { d.clone() } else { -d })
            .collect();
        ChainComplex { ring: self.ring, min_degree: self.min_degree + k, ranks: self.ranks.clone(), diffs }
    }

    /// `ker d_n / im d_{n+1}` in invariant-factor form.
    pub fn homology(&self, n: i64) -> PresentedGroup {
        Subquotient::new(&self.d(n), &self.d(n + 1))
            .expect("complex satisfies d² = 0")
            .group
    }

    /// Degree range covering both complexes.
    pub(crate) fn joint_degrees(a: &ChainComplex, b: &ChainComplex) -> std::ops::RangeInclusive<i64> {
        Self::span(&[a, b])
    }

    /// Smallest degree range covering every nonzero complex in the list.
    pub(crate) fn span(xs: &[&ChainComplex]) -> std::ops::RangeInclusive<i64> {
        let live: Vec<_> = xs.iter().filter(|x| !x.is_zero()).collect();
        match (live.iter().map(|x| x.min_degree).min(), live.iter().map(|x| x.max_degree()).max()) {
            (Some(lo), Some(hi)) => lo..=hi,
            #[allow(clippy::reversed_empty_ranges)]
            _ => 0..=-1,
        }
    }
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainComplex[{}]", self.ring)?;
        if self.is_zero() {
            return write!(f, " 0");
        }
        for n in self.degrees().rev() {
            write!(f, " {n}:{}", self.rank(n))?;
            if n > self.min_degree {
                write!(f, " -{}->", self.d(n))?;
            }
        }
        Ok(())
    }
}
