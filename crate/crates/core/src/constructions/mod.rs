//! The design families of both tables, their groups, and the row catalog.

mod alt7;
mod catalog;
mod complete;
mod gammal1;
mod geometric;
mod golay;
mod hyperoval;
mod quadratic;
mod regn;
mod sporadic;
mod tables;
mod zsigmondy;

pub use alt7::{alt7_coset_pg32, alt7_matrix_pg32, Alt7Coset};
pub use catalog::{catalog, BuiltRow, CatalogRow, Expectation, RowKind};
pub use complete::{complete_design, complete_with_symmetric};
pub use gammal1::{
    gammal1_group, MAX_FIELD_ORDER, gammal1_is_transitive, gammal1_orbit_is_transitive, standard_triples,
    GammaL1Subgroup,
};
pub use geometric::{ag_design, pg_design, GroupLevel, PgKind};
pub use golay::{d176, golay_designs, h11, h12, m22_design, GolayDesigns, D176, FIXED_SYMBOLS};
pub use hyperoval::hyperoval_design;
pub use quadratic::{quadratic_forms_design, sp62_negative_fixture, FormsSign, SpVariant, Sp62Fixture};
pub use regn::{
    construction_regn, regn_alt7_input, regn_gammal116_input, regn_gl32_input, ConstructionInput,
};
pub use sporadic::{
    load_matrix_group, load_sporadic, parse_matrix_group, MatrixGroupFile, Sporadic,
};
pub use tables::{rows_matching, TableRow};
pub use zsigmondy::zsigmondy_ppd;

use crate::design::Design;
use crate::permgroup::GeneratedGroup;

/// A design with a group of automorphisms.
#[derive(Clone, Debug)]
pub struct Construction {
    pub design: Design,
    pub group: GeneratedGroup,
    /// The translation subgroup, for designs on a vector space.
    pub translations: Option<GeneratedGroup>,
}

impl Construction {
    pub fn new(design: Design, group: GeneratedGroup) -> Self {
        Construction {
            design,
            group,
            translations: None,
        }
    }

    pub fn with_translations(mut self, n: GeneratedGroup) -> Self {
        self.translations = Some(n);
        self
    }

    /// The same group acting on the complementary design.
    pub fn complement(&self) -> crate::Result<Construction> {
        Ok(Construction {
            design: self.design.complement()?,
            group: self.group.clone(),
            translations: self.translations.clone(),
        })
    }
}
