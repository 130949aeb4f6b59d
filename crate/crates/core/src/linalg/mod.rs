//! Exact dense linear algebra over ℤ and 𝔽_p.

mod group;
mod matrix;
mod ring;
mod smith;

pub use group::{cokernel_presentation, unit_coordinates, PresentedGroup, Subquotient};
pub use matrix::ExactMatrix;
pub use ring::{Prime, Ring};
pub use smith::{
    column_echelon, idempotent_image, inverse, kernel_basis, rank, smith_form, solve_linear, solve_with,
    split_injection_witness, split_surjection_witness, SmithForm,
};
