//! Finite fields, geometry over them, symplectic forms and the Golay codes.

pub mod code;
pub mod field;
pub mod geometry;
pub mod hyperoval;
pub mod matrix;
pub mod semilinear;
pub mod symplectic;

pub use code::{golay_code, parse_code, GolayKind, LinearCode};
pub use field::{FieldElement, FiniteField};
pub use geometry::{
    gaussian_binomial, projective_objects, subspaces, AffineSpace, ObjectKind, ParallelClasses,
    ProjectiveSpace, Subspace,
};
pub use hyperoval::{hyperovals_pg24, Hyperovals};
pub use matrix::FqMatrix;
pub use semilinear::{linear_action, semilinear_closure, LinearDomain};
pub use symplectic::{
    forms_polarising, subfield_symplectic_group, symplectic_group, FormType, QuadraticForm,
    SymplecticGroup,
};
