use num_bigint::BigInt;

use crate::complex::{ChainComplex, ChainMap, HomComplex};
use crate::dw_exact::DwSes;
use crate::error::{Error, Result};
use crate::linalg::{PresentedGroup, Subquotient};

/// `π(X, Y)`: chain maps modulo homotopy, as `H_0 Hom(X, Y)`.
#[derive(Clone, Debug)]
pub struct HomotopyClassGroup {
    pub group: PresentedGroup,
    /// Representative chain maps, one per cyclic summand.
    pub generators: Vec<ChainMap>,
    hom: HomComplex,
    cycles: Subquotient,
}

impl HomotopyClassGroup {
    pub fn source(&self) -> &ChainComplex {
        &self.hom.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.hom.target
    }

    /// Coordinates of the class of `f`; equal coordinates mean homotopic maps.
    pub fn reduce(&self, f: &ChainMap) -> Result<Vec<BigInt>> {
        if f.source() != self.source() || f.target() != self.target() {
            return Err(Error::Dimension("map does not belong to this homotopy class group".into()));
        }
        self.cycles.reduce(&self.hom.flatten_map(f))
    }

    /// A representative of the class with the given coordinates.
    pub fn element(&self, coords: &[BigInt]) -> ChainMap {
        self.hom.map_from_vector(&self.cycles.element(coords))
    }

    /// Class of `b ∘ a` for `a ∈ π(X, Y)` (`first`) and `b ∈ self = π(Y, Z)`.
    pub fn compose(
        &self,
        b: &[BigInt],
        first: &HomotopyClassGroup,
        a: &[BigInt],
        into: &HomotopyClassGroup,
    ) -> Result<Vec<BigInt>> {
        into.reduce(&self.element(b).try_after(&first.element(a))?)
    }
}

pub fn pi_group(x: &ChainComplex, y: &ChainComplex) -> Result<HomotopyClassGroup> {
    let hom = HomComplex::new(x, y)?;
    let cycles = Subquotient::new(&hom.differential(0), &hom.differential(1))?;
    let generators = (0..cycles.group.num_generators())
        .map(|i| hom.map_from_vector(&cycles.generator(i)))
        .collect();
    Ok(HomotopyClassGroup { group: cycles.group.clone(), generators, hom, cycles })
}

/// `Ext^n_dw(X, Y) = π(X, Σ^n Y)`.
pub fn ext_dw(n: i64, x: &ChainComplex, y: &ChainComplex) -> Result<PresentedGroup> {
    if n < 0 {
        return Err(Error::NegativeDegree(n));
    }
    Ok(pi_group(x, &y.shift(n))?.group)
}

/// The classifying map of an extension with its class in `π(C, ΣA)`.
#[derive(Clone, Debug)]
pub struct ExtensionClass {
    /// `τ_n = r_{n-1} d_n s_n : C_n → A_{n-1}`.
    pub map: ChainMap,
    pub group: HomotopyClassGroup,
    pub coordinates: Vec<BigInt>,
}

pub fn ses_to_class(e: &DwSes) -> Result<ExtensionClass> {
    if let crate::complex::Validity::Invalid { degree, reason } = e.verify() {
        return Err(Error::InvalidWitness(format!("degree {degree}: {reason}")));
    }
    let (a, b, c) = (e.sub(), e.middle(), e.quotient());
    let sa = a.shift(1);
    let map = ChainMap::new(
        c.clone(),
        sa.clone(),
        c.degrees()
            .map(|n| (n, &(&*e.retractions.component(n - 1) * &*b.d(n)) * &*e.sections.component(n)))
            .collect(),
    )?;
    if let crate::complex::Validity::Invalid { degree, reason } = map.validate() {
        return Err(Error::InvalidWitness(format!("obstruction is not a chain map at degree {degree}: {reason}")));
    }
    let group = pi_group(c, &sa)?;
    let coordinates = group.reduce(&map)?;
    Ok(ExtensionClass { map, group, coordinates })
}

/// The extension `A ↣ A ⊕ C ↠ C` twisted by `f : C → ΣA`.
pub fn class_to_ses(f: &ChainMap) -> Result<DwSes> {
    if let crate::complex::Validity::Invalid { degree, reason } = f.validate() {
        return Err(Error::InvalidMap { degree, reason });
    }
    let c = f.source();
    let a = f.target().shift(-1);
    let tau: Vec<(i64, _)> = c.degrees().map(|n| (n, f.component(n).into_owned())).collect();
    DwSes::twisted(&a, c, &tau)
}
