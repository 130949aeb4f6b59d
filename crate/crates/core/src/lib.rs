//! Exact model structures made computable on finite data.
//!
//! The crate implements the degreewise-split exact structure on bounded
//! chain complexes of finitely generated free modules over ℤ or 𝔽_p, the
//! Frobenius model structure it carries (weak equivalences are chain
//! homotopy equivalences, trivial objects are contractible complexes), a
//! second Frobenius instance given by modules over `k[ε]/(ε²)`, and a
//! sampled checker for the correspondence between cotorsion pairs and
//! exact model structures.

pub mod error;
pub mod frobenius;
pub mod hovey;
pub mod io;
pub mod keps;
pub mod complex;
pub mod dw_exact;
pub mod linalg;
pub mod seeding;

pub use error::{Error, Result};
