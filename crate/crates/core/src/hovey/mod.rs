//! Sampled checks of cotorsion-pair and model-structure conditions against
//! an exact category. A passing verdict means no counterexample was found.

mod checks;
mod classes;
mod instance;
mod verdict;

pub use checks::{
    check_hereditary, check_orthogonality, check_sub_model, check_thick, classify_by_classes, MAX_TRIES,
};
pub use classes::{sub_classes, Class, ClassSpec, SubClasses, SubModel};
pub use instance::{ChainInstance, ExactInstance, KEpsInstance, SampledSes};
pub use verdict::{Counterexample, Verdict};
