use std::sync::Arc;

use super::Construction;
use crate::algebra::geometry::sl_generators;
use crate::algebra::{hyperovals_pg24, semilinear_closure, FiniteField, LinearDomain};
use crate::design::Design;
use crate::error::Result;

/// The 56 hyperovals in the PSL(3,4)-orbit of the lexicographically least one, with
/// PSL(3,4) or, when `field_automorphism` is set, PΣL(3,4).
pub fn hyperoval_design(field_automorphism: bool) -> Result<Construction> {
    let h = hyperovals_pg24()?;
    let design = Design::new(21, h.least_orbit(), "PG(2,4) hyperovals")?;
    let group = if field_automorphism {
        let field = Arc::new(FiniteField::new(2, 2)?);
        semilinear_closure(
            &sl_generators(&field, 3),
            &field,
            3,
            LinearDomain::ProjectivePoints,
            "PΣL(3,4)",
        )?
    } else {
        h.group
    };
    Ok(Construction::new(design, group))
}
