//! Bounded chain complexes of finitely generated free modules.

#[allow(clippy::module_inception)]
mod complex;
mod constructions;
pub mod fixtures;
mod hom;
mod map;
pub mod random;

pub use complex::{ChainComplex, Validity};
pub use constructions::{cone, direct_sum, map_sum, Biproduct, Cone};
pub use hom::{HomBlock, HomComplex};
pub use map::{ChainMap, Homotopy};

use crate::error::Result;

/// `Σ^k X`.
pub fn shift(x: &ChainComplex, k: i64) -> ChainComplex {
    x.shift(k)
}

pub fn hom_complex(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex> {
    Ok(HomComplex::new(x, y)?.complex)
}

pub fn homology(x: &ChainComplex, n: i64) -> crate::linalg::PresentedGroup {
    x.homology(n)
}

#[cfg(test)]
mod tests;
