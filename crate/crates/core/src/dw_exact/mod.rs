//! The degreewise split exact structure on bounded chain complexes.
//!
//! A short sequence `A ↣ B ↠ C` is admissible when it splits in every
//! degree (not necessarily as complexes). Admissible monos and epis are
//! exactly the chain maps whose components are split injective / split
//! surjective; every construction here consumes explicit splittings.

mod admissible;
mod axioms;
mod pushout;
mod retract;
pub mod sample;
mod ses;

pub use admissible::{admissible_epi, admissible_mono, AdmissibleKind, AdmissibleWitness};
pub use axioms::{axiom_suite, axiom_suite_with, AxiomReport, ClauseReport};
pub use pushout::{pullback_epi, pushout_mono, Pullback, Pushout};
pub use retract::{
    graph_splitting, is_chain_retraction, retract_embedding, split_mono_cokernel, GraphSplitting,
    RetractDiagram, SplitMonoCokernel,
};
pub use ses::DwSes;
