use std::collections::BTreeMap;

use crate::complex::{ChainComplex, ChainMap};
use crate::dw_exact::DwSes;
use crate::linalg::{idempotent_image, split_injection_witness, split_surjection_witness, ExactMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissibleKind {
    Mono,
    Epi,
}

/// Certificate that a chain map is a degreewise split mono or epi.
///
/// For a mono `i : A → B` the complement is the cokernel `C` with quotient
/// map `B → C` as `connecting` and sections `C → B` as `complement_splitting`;
/// `inverse` holds the degreewise retractions `B → A`. For an epi the roles
/// swap: the complement is the kernel `K`, `connecting` is `K → B`,
/// `complement_splitting` the retractions `B → K` and `inverse` the sections.
#[derive(Clone, Debug)]
pub struct AdmissibleWitness {
    pub kind: AdmissibleKind,
    pub map: ChainMap,
    pub inverse: ChainMap,
    pub complement: ChainComplex,
    pub connecting: ChainMap,
    pub complement_splitting: ChainMap,
}

impl AdmissibleWitness {
    /// The completed short exact sequence.
    pub fn ses(&self) -> DwSes {
        let ses = match self.kind {
            AdmissibleKind::Mono => DwSes {
                i: self.map.clone(),
                p: self.connecting.clone(),
                sections: self.complement_splitting.clone(),
                retractions: self.inverse.clone(),
            },
            AdmissibleKind::Epi => DwSes {
                i: self.connecting.clone(),
                p: self.map.clone(),
                sections: self.inverse.clone(),
                retractions: self.complement_splitting.clone(),
            },
        };
        debug_assert!(ses.verify().is_valid(), "witness assembles into a split sequence");
        ses
    }
}

fn lookup(m: &BTreeMap<i64, ExactMatrix>, n: i64, rows: usize, cols: usize, like: &ChainComplex) -> ExactMatrix {
    m.get(&n).cloned().unwrap_or_else(|| ExactMatrix::zeros(like.ring(), rows, cols))
}

/// `Some` iff every component of `f` has a left inverse; the witness carries
/// the cokernel realized on the complement `im(1 − f r)` in its canonical
/// echelon basis, with the induced differential.
pub fn admissible_mono(f: &ChainMap) -> Option<AdmissibleWitness> {
    let a = f.source();
    let b = f.target();
    let degrees = ChainComplex::span(&[a, b]);
    let mut retractions = Vec::new();
    let mut basis = BTreeMap::new();
    let mut quotient = BTreeMap::new();
    for n in degrees.clone() {
        let fn_ = f.component(n);
        let r = split_injection_witness(&fn_)?;
        let e = &b.identity_matrix(n) - &(&*fn_ * &r);
        let (s, l) = idempotent_image(&e).ok()?;
        quotient.insert(n, &l * &e);
        basis.insert(n, s);
        retractions.push((n, r));
    }
    let ranks: Vec<usize> = degrees.clone().map(|n| basis[&n].cols()).collect();
    let lo = *degrees.start();
    let rank_c = |n: i64| basis.get(&n).map_or(0, ExactMatrix::cols);
    let diffs = degrees
        .clone()
        .map(|n| {
            let q_below = lookup(&quotient, n - 1, rank_c(n - 1), b.rank(n - 1), b);
            (n, &(&q_below * &*b.d(n)) * &basis[&n])
        })
        .collect();
    let c = ChainComplex::new(f.ring(), lo, ranks, diffs).ok()?;
    let inverse = ChainMap::new(b.clone(), a.clone(), retractions).ok()?;
    let connecting = ChainMap::new(b.clone(), c.clone(), quotient.into_iter().collect()).ok()?;
    let sections = ChainMap::new(c.clone(), b.clone(), basis.into_iter().collect()).ok()?;
    Some(AdmissibleWitness {
        kind: AdmissibleKind::Mono,
        map: f.clone(),
        inverse,
        complement: c,
        connecting,
        complement_splitting: sections,
    })
}

/// `Some` iff every component of `p` has a right inverse; the witness
/// carries the kernel realized on `im(1 − s p)`.
pub fn admissible_epi(p: &ChainMap) -> Option<AdmissibleWitness> {
    let b = p.source();
    let c = p.target();
    let degrees = ChainComplex::span(&[b, c]);
    let mut sections = Vec::new();
    let mut basis = BTreeMap::new();
    let mut retract = BTreeMap::new();
    for n in degrees.clone() {
        let pn = p.component(n);
        let s = split_surjection_witness(&pn)?;
        let e = &b.identity_matrix(n) - &(&s * &*pn);
        let (k, l) = idempotent_image(&e).ok()?;
        retract.insert(n, &l * &e);
        basis.insert(n, k);
        sections.push((n, s));
    }
    let ranks: Vec<usize> = degrees.clone().map(|n| basis[&n].cols()).collect();
    let lo = *degrees.start();
    let rank_k = |n: i64| basis.get(&n).map_or(0, ExactMatrix::cols);
    let diffs = degrees
        .clone()
        .map(|n| {
            let r_below = lookup(&retract, n - 1, rank_k(n - 1), b.rank(n - 1), b);
            (n, &(&r_below * &*b.d(n)) * &basis[&n])
        })
        .collect();
    let k = ChainComplex::new(p.ring(), lo, ranks, diffs).ok()?;
    let inverse = ChainMap::new(c.clone(), b.clone(), sections).ok()?;
    let connecting = ChainMap::new(k.clone(), b.clone(), basis.into_iter().collect()).ok()?;
    let retractions = ChainMap::new(b.clone(), k.clone(), retract.into_iter().collect()).ok()?;
    Some(AdmissibleWitness {
        kind: AdmissibleKind::Epi,
        map: p.clone(),
        inverse,
        complement: k,
        connecting,
        complement_splitting: retractions,
    })
}
