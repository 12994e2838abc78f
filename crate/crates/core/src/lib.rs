//! Pairwise transitive 2-designs.
//!
//! A 2-design is *pairwise transitive* under a group `G` of automorphisms when `G` is
//! transitive on each of five sets of ordered pairs: distinct points, flags, antiflags,
//! intersecting block pairs and disjoint block pairs. This crate builds every family of
//! such designs known at desk scale, together with its acting group, and certifies the
//! property by exact orbit counting.
//!
//! * [`permgroup`]: permutations, Schreier–Sims chains, coset actions, ranks, blocks.
//! * [`algebra`]: finite fields, projective and affine geometry, symplectic forms, Golay codes.
//! * [`design`]: incidence structures, parameters, transforms, the nicely-affine test.
//! * [`verify`]: brute force and fast pairwise-transitivity checks, block-action reports.
//! * [`constructions`]: the design families, their groups and the row catalog.
//! * [`harness`]: certify-all, the small-degree search and the command-line front end.

pub mod algebra;
pub mod constructions;
pub mod data;
pub mod design;
pub mod error;
pub mod harness;
pub mod permgroup;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
