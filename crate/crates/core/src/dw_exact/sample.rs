//! Seeded samplers for degreewise split sequences.

use rand::Rng;

use crate::complex::random::{random_complex, random_hom_cycle, random_isomorphic, SampleBounds};
use crate::complex::ChainComplex;
use crate::dw_exact::DwSes;

/// A random degreewise split sequence `A ↣ B ↠ C`: a random extension class
/// `τ ∈ Z_{-1} Hom(C, A)` twists `A ⊕ C`, then a random change of basis of
/// the middle term hides the splitting. `sub` and `quotient` fix the ends.
pub fn random_ses<R: Rng + ?Sized>(
    rng: &mut R,
    bounds: &SampleBounds,
    sub: Option<&ChainComplex>,
    quotient: Option<&ChainComplex>,
) -> DwSes {
    let a = sub.cloned().unwrap_or_else(|| random_complex(rng, bounds));
    let c = quotient.cloned().unwrap_or_else(|| random_complex(rng, bounds));
    let tau = random_hom_cycle(rng, &c, &a, -1);
    let ses = DwSes::twisted(&a, &c, &tau).expect("cycle twisting");
    let (_, phi, phi_inv) = random_isomorphic(rng, ses.middle());
    ses.transport(&phi, &phi_inv).expect("isomorphic transport")
}
