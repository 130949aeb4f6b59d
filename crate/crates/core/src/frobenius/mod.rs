//! The Frobenius model structure on degreewise split complexes.
//!
//! Cofibrations are the degreewise split monos, fibrations the degreewise
//! split epis, and the trivial objects the contractible complexes. Every
//! object is bifibrant, so left and right homotopy both reduce to chain
//! homotopy and `π(X, Y)` is `H_0 Hom(X, Y)`.

mod classify;
mod covers;
mod groups;
mod homotopy;

pub use classify::{
    classify, factor_cof_trivfib, factor_trivcof_fib, homotopy_inverse, weak_equivalence_by_kernel, Factorization,
    HomotopyEquivalence, MapClass,
};
pub use covers::{contractible_cover, enough_injectives, enough_projectives, path_object, PathObject};
pub use groups::{class_to_ses, ext_dw, pi_group, ses_to_class, ExtensionClass, HomotopyClassGroup};
pub use homotopy::{find_homotopy, homotopic_by_factorization, injectivity_probe, is_contractible, CoverFactorization};

#[cfg(test)]
mod tests;
