use crate::complex::{direct_sum, ChainComplex, ChainMap, Validity};
use crate::dw_exact::{admissible_epi, admissible_mono};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// A degreewise split short exact sequence `A ↣ B ↠ C`.
///
/// `sections` (`C → B`) and `retractions` (`B → A`) are graded families,
/// not chain maps in general; they witness the degreewise splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DwSes {
    pub i: ChainMap,
    pub p: ChainMap,
    pub sections: ChainMap,
    pub retractions: ChainMap,
}

impl DwSes {
    pub fn new(i: ChainMap, p: ChainMap, sections: ChainMap, retractions: ChainMap) -> Result<Self> {
        let ses = DwSes { i, p, sections, retractions };
        match ses.verify() {
            Validity::Valid => Ok(ses),
            Validity::Invalid { degree, reason } => {
                Err(Error::InvalidWitness(format!("degree {degree}: {reason}")))
            }
        }
    }

    pub fn sub(&self) -> &ChainComplex {
        self.i.source()
    }

    pub fn middle(&self) -> &ChainComplex {
        self.i.target()
    }

    pub fn quotient(&self) -> &ChainComplex {
        self.p.target()
    }

    /// Checks every identity: `i`, `p` chain maps, `p i = 0`, and per degree
    /// `r i = 1`, `p s = 1`, `i r + s p = 1`.
    pub fn verify(&self) -> Validity {
        let bad = |degree: i64, reason: &str| Validity::Invalid { degree, reason: reason.into() };
        if self.p.source() != self.middle()
            || self.sections.source() != self.quotient()
            || self.sections.target() != self.middle()
            || self.retractions.source() != self.middle()
            || self.retractions.target() != self.sub()
        {
            return bad(0, "objects of the sequence do not match");
        }
        for m in [&self.i, &self.p] {
            if let Validity::Invalid { degree, reason } = m.validate() {
                return Validity::Invalid { degree, reason };
            }
        }
        let (a, b, c) = (self.sub(), self.middle(), self.quotient());
        for n in ChainComplex::span(&[a, b, c]) {
            let i = self.i.component(n);
            let p = self.p.component(n);
            let s = self.sections.component(n);
            let r = self.retractions.component(n);
            if !(&*p * &*i).is_zero() {
                return bad(n, "p ∘ i ≠ 0");
            }
            if !(&*r * &*i).is_identity() {
                return bad(n, "r ∘ i ≠ 1");
            }
            if !(&*p * &*s).is_identity() {
                return bad(n, "p ∘ s ≠ 1");
            }
            if !(&(&*i * &*r) + &(&*s * &*p)).is_identity() {
                return bad(n, "i r + s p ≠ 1");
            }
        }
        Validity::Valid
    }

    /// The extension of `C` by `A` with middle term `A_n ⊕ C_n` and
    /// differential `[[d_A, τ], [0, d_C]]`, where `τ_n : C_n → A_{n-1}`
    /// satisfies `d_A τ + τ d_C = 0`.
    pub fn twisted(a: &ChainComplex, c: &ChainComplex, tau: &[(i64, ExactMatrix)]) -> Result<Self> {
        a.ring().ensure_same(&c.ring())?;
        let ring = a.ring();
        let tau_at = |n: i64| -> ExactMatrix {
            tau.iter()
                .find(|(m, _)| *m == n)
                .map(|(_, t)| t.clone())
                .unwrap_or_else(|| ExactMatrix::zeros(ring, a.rank(n - 1), c.rank(n)))
        };
        for &(n, ref t) in tau {
            if t.shape() != (a.rank(n - 1), c.rank(n)) {
                return Err(Error::InvalidWitness(format!("twisting component {n} has shape {:?}", t.shape())));
            }
        }
        let split = direct_sum(a, c)?;
        let degrees = ChainComplex::joint_degrees(a, c);
        let lo = *degrees.start();
        let ranks: Vec<usize> = degrees.clone().map(|n| a.rank(n) + c.rank(n)).collect();
        let diffs = degrees
            .map(|n| {
                let d = ExactMatrix::blocks2(
                    &a.d(n),
                    &tau_at(n),
                    &ExactMatrix::zeros(ring, c.rank(n - 1), a.rank(n)),
                    &c.d(n),
                );
                (n, d)
            })
            .collect();
        let b = ChainComplex::checked(ring, lo, ranks, diffs)
            .map_err(|e| Error::InvalidWitness(format!("twisting is not a cycle: {e}")))?;
        let re = |m: &ChainMap, s: &ChainComplex, t: &ChainComplex| {
            ChainMap::new(s.clone(), t.clone(), s.degrees().map(|n| (n, m.component(n).into_owned())).collect())
        };
        let i = re(&split.in1, a, &b)?;
        let p = re(&split.pr2, &b, c)?;
        let s = re(&split.in2, c, &b)?;
        let r = re(&split.pr1, &b, a)?;
        DwSes::new(i, p, s, r)
    }

    /// Completes `i`, `p` with splittings: retractions from `i` and sections
    /// `(1 − i r) s` from any sections `s` of `p`. Fails unless `i` and `p`
    /// are degreewise split and the sequence is exact.
    pub fn from_maps(i: ChainMap, p: ChainMap) -> Result<Self> {
        let mono = admissible_mono(&i).ok_or_else(|| Error::InvalidWitness("first map is not degreewise split".into()))?;
        let epi = admissible_epi(&p).ok_or_else(|| Error::InvalidWitness("second map is not degreewise split".into()))?;
        let r = mono.inverse;
        let b = i.target().clone();
        let ir = ChainMap::new(b.clone(), b.clone(), b.degrees().map(|n| (n, &*i.component(n) * &*r.component(n))).collect())?;
        let e = ChainMap::new(
            b.clone(),
            b.clone(),
            b.degrees().map(|n| (n, &b.identity_matrix(n) - &*ir.component(n))).collect(),
        )?;
        let c = p.target().clone();
        let s = ChainMap::new(
            c.clone(),
            b,
            c.degrees().map(|n| (n, &*e.component(n) * &*epi.inverse.component(n))).collect(),
        )?;
        DwSes::new(i, p, s, r)
    }

    /// The canonical split sequence `A ↣ A ⊕ C ↠ C`.
    pub fn split(a: &ChainComplex, c: &ChainComplex) -> Result<Self> {
        Self::twisted(a, c, &[])
    }

    /// Transport along an isomorphism `φ : B → B'` of the middle term.
    pub fn transport(&self, phi: &ChainMap, phi_inv: &ChainMap) -> Result<Self> {
        DwSes::new(
            phi.try_after(&self.i)?,
            self.p.try_after(phi_inv)?,
            phi.try_after(&self.sections)?,
            self.retractions.try_after(phi_inv)?,
        )
    }

    /// For another sequence on the same mono, the induced isomorphism of
    /// quotients `C → C'` and its inverse.
    pub fn quotient_iso(&self, other: &DwSes) -> Result<(ChainMap, ChainMap)> {
        if self.i != other.i {
            return Err(Error::InvalidWitness("sequences have different monos".into()));
        }
        Ok((other.p.try_after(&self.sections)?, self.p.try_after(&other.sections)?))
    }

    /// For another sequence on the same epi, the induced isomorphism of
    /// kernels `A → A'` and its inverse.
    pub fn sub_iso(&self, other: &DwSes) -> Result<(ChainMap, ChainMap)> {
        if self.p != other.p {
            return Err(Error::InvalidWitness("sequences have different epis".into()));
        }
        Ok((other.retractions.try_after(&self.i)?, self.retractions.try_after(&other.i)?))
    }
}
