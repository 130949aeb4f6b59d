use crate::complex::ChainMap;
use crate::dw_exact::{AdmissibleKind, AdmissibleWitness, DwSes};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// Pushout of an admissible mono `i : A ↣ B` along `f : A → Z`.
#[derive(Clone, Debug)]
pub struct Pushout {
    /// `Z ↣ P ↠ coker(i)`; its mono is the pushed-forward map `Z → P`.
    pub ses: DwSes,
    /// `B → P`.
    pub from_middle: ChainMap,
}

impl Pushout {
    pub fn object(&self) -> &crate::complex::ChainComplex {
        self.ses.middle()
    }

    pub fn from_z(&self) -> &ChainMap {
        &self.ses.i
    }
}

/// Pullback of an admissible epi `p : B ↠ C` along `g : Z → C`.
#[derive(Clone, Debug)]
pub struct Pullback {
    /// `ker(p) ↣ P ↠ Z`; its epi is the pulled-back map `P → Z`.
    pub ses: DwSes,
    /// `P → B`.
    pub to_middle: ChainMap,
}

impl Pullback {
    pub fn object(&self) -> &crate::complex::ChainComplex {
        self.ses.middle()
    }

    pub fn to_z(&self) -> &ChainMap {
        &self.ses.p
    }
}

/// Builds `P_n = Z_n ⊕ C_n` from the splitting of `A ↣ B ↠ C`: with
/// `τ = r d_B s`, the differential of `P` is `[[d_Z, f τ], [0, d_C]]`.
pub fn pushout_mono(w: &AdmissibleWitness, f: &ChainMap) -> Result<Pushout> {
    if w.kind != AdmissibleKind::Mono {
        return Err(Error::InvalidWitness("pushout needs an admissible mono".into()));
    }
    if f.source() != w.map.source() {
        return Err(Error::Dimension("pushout: maps do not share a source".into()));
    }
    let e = w.ses();
    let b = e.middle();
    let c = e.quotient();
    let z = f.target();
    let twist: Vec<(i64, ExactMatrix)> = c
        .degrees()
        .map(|n| {
            let tau = &(&*e.retractions.component(n - 1) * &*b.d(n)) * &*e.sections.component(n);
            (n, &*f.component(n - 1) * &tau)
        })
        .collect();
    let ses = DwSes::twisted(z, c, &twist)?;
    let p = ses.middle().clone();
    let from_middle = ChainMap::checked(
        b.clone(),
        p,
        b.degrees()
            .map(|n| {
                let top = &*f.component(n) * &*e.retractions.component(n);
                (n, ExactMatrix::vstack(&[&top, &e.p.component(n)]))
            })
            .collect(),
    )?;
    Ok(Pushout { ses, from_middle })
}

/// Builds `P_n = K_n ⊕ Z_n` with differential `[[d_K, τ g], [0, d_Z]]`.
pub fn pullback_epi(w: &AdmissibleWitness, g: &ChainMap) -> Result<Pullback> {
    if w.kind != AdmissibleKind::Epi {
        return Err(Error::InvalidWitness("pullback needs an admissible epi".into()));
    }
    if g.target() != w.map.target() {
        return Err(Error::Dimension("pullback: maps do not share a target".into()));
    }
    let e = w.ses();
    let b = e.middle();
    let k = e.sub();
    let z = g.source();
    let twist: Vec<(i64, ExactMatrix)> = z
        .degrees()
        .map(|n| {
            let tau = &(&*e.retractions.component(n - 1) * &*b.d(n)) * &*e.sections.component(n);
            (n, &tau * &*g.component(n))
        })
        .collect();
    let ses = DwSes::twisted(k, z, &twist)?;
    let p = ses.middle().clone();
    let to_middle = ChainMap::checked(
        p.clone(),
        b.clone(),
        p.degrees()
            .map(|n| {
                let right = &*e.sections.component(n) * &*g.component(n);
                (n, ExactMatrix::hstack(&[&e.i.component(n), &right]))
            })
            .collect(),
    )?;
    Ok(Pullback { ses, to_middle })
}
