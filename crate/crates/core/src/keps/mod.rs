//! Modules over `k[ε]/(ε²)` with all short exact sequences: a Frobenius
//! category whose projectives and injectives are the free modules.

mod module;
mod stable;
mod structure;

pub use module::{hom_basis, random_hom, random_module, KEpsHom, KEpsModule};
pub use stable::{ext1_keps, ext1_via_cover, stable_hom, StableHom};
pub use structure::{cokernel, decompose, free_cover, free_envelope, is_free, kernel, random_extension, Decomposition, KEpsSes};
