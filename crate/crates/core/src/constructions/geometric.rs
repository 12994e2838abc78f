//! Projective and affine geometries with their classical groups.

use std::fmt;
use std::sync::Arc;

use super::Construction;
use crate::algebra::geometry::{gl_extra_generator, sl_generators};
use crate::algebra::{
    linear_action, projective_objects, semilinear_closure, AffineSpace, FiniteField, LinearDomain,
    ObjectKind, ProjectiveSpace,
};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::GeneratedGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgKind {
    Hyperplanes,
    Lines,
}

/// How much of the semilinear group to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GroupLevel {
    /// PSL / ASL.
    #[default]
    Special,
    /// PGL / AGL.
    General,
    /// PΓL / AΓL.
    Semilinear,
}

impl GroupLevel {
    fn prefix(self) -> &'static str {
        match self {
            GroupLevel::Special => "SL",
            GroupLevel::General => "GL",
            GroupLevel::Semilinear => "ΓL",
        }
    }
}

impl fmt::Display for GroupLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.prefix())
    }
}

fn matrices(field: &FiniteField, d: usize, level: GroupLevel) -> Vec<crate::algebra::FqMatrix> {
    let mut gens = sl_generators(field, d);
    if level != GroupLevel::Special && field.order() > 2 {
        gens.push(gl_extra_generator(field, d));
    }
    gens
}

fn group_on(
    field: &Arc<FiniteField>,
    d: usize,
    domain: LinearDomain,
    level: GroupLevel,
    label: String,
) -> Result<GeneratedGroup> {
    let gens = matrices(field, d, level);
    if level == GroupLevel::Semilinear {
        semilinear_closure(&gens, field, d, domain, label)
    } else {
        linear_action(&gens, field, d, domain, label)
    }
}

/// Hyperplanes or lines of PG(d-1, q), with PSL, PGL or PΓL acting on points.
pub fn pg_design(d: usize, q: u32, kind: PgKind, level: GroupLevel) -> Result<Construction> {
    match kind {
        PgKind::Hyperplanes if d <= 2 => {
            return Err(Error::InvalidArgument(format!("hyperplane design needs d > 2, got {d}")))
        }
        PgKind::Lines if d < 4 => {
            return Err(Error::InvalidArgument(format!("line design needs d >= 4, got {d}")))
        }
        _ => {}
    }
    let field = Arc::new(FiniteField::from_order(q)?);
    let pg = ProjectiveSpace::new(field.clone(), d)?;
    let (objects, name) = match kind {
        PgKind::Hyperplanes => (ObjectKind::Hyperplanes, "hyperplanes"),
        PgKind::Lines => (ObjectKind::Lines, "lines"),
    };
    let blocks = pg.point_sets(&projective_objects(&field, d, objects)?);
    let design = Design::new(pg.num_points(), blocks, format!("PG({},{q}) {name}", d - 1))?;
    let label = format!("P{}({d},{q})", level.prefix());
    let group = group_on(&field, d, LinearDomain::ProjectivePoints, level, label)?;
    Ok(Construction::new(design, group))
}

/// Affine hyperplanes of AG(f, q) with ASL, AGL or AΓL; the translations are recorded.
pub fn ag_design(f: usize, q: u32, level: GroupLevel) -> Result<Construction> {
    if f < 2 {
        return Err(Error::InvalidArgument(format!("affine design needs f >= 2, got {f}")));
    }
    let field = Arc::new(FiniteField::from_order(q)?);
    let ag = AffineSpace::new(field.clone(), f);
    let blocks = ag.hyperplane_cosets()?.blocks();
    let design = Design::new(ag.num_points(), blocks, format!("AG({f},{q})"))?;
    let translations = ag.translation_generators();
    let n = GeneratedGroup::new(ag.num_points(), translations.clone(), format!("{q}^{f}"))?;
    let linear = group_on(&field, f, LinearDomain::Vectors, level, String::new())?;
    let group = linear.extended(&translations, format!("A{}({f},{q})", level.prefix()))?;
    Ok(Construction::new(design, group).with_translations(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(c: &Construction) -> (usize, usize, Option<usize>, Option<usize>) {
        let p = c.design.parameters();
        (p.v, p.b, p.k, p.lambda)
    }

    #[test]
    fn projective_hyperplanes() {
        let c = pg_design(4, 2, PgKind::Hyperplanes, GroupLevel::Special).unwrap();
        assert_eq!(params(&c), (15, 15, Some(7), Some(3)));
        assert_eq!(c.group.order(), 20160);
        assert!(c.design.is_preserved_by(&c.group));
        let c = pg_design(3, 3, PgKind::Hyperplanes, GroupLevel::General).unwrap();
        assert_eq!(params(&c), (13, 13, Some(4), Some(1)));
        assert!(pg_design(2, 3, PgKind::Hyperplanes, GroupLevel::Special).is_err());
    }

    #[test]
    fn projective_lines() {
        let c = pg_design(4, 2, PgKind::Lines, GroupLevel::Special).unwrap();
        let p = c.design.parameters();
        assert_eq!(params(&c), (15, 35, Some(3), Some(1)));
        assert_eq!(p.intersection_numbers(), vec![0, 1]);
        assert_eq!(p.mu, Some(1));
        assert!(pg_design(3, 2, PgKind::Lines, GroupLevel::Special).is_err());
    }

    #[test]
    fn semilinear_doubles_for_q4() {
        let s = pg_design(3, 4, PgKind::Hyperplanes, GroupLevel::Special).unwrap();
        let g = pg_design(3, 4, PgKind::Hyperplanes, GroupLevel::Semilinear).unwrap();
        assert_eq!(s.group.order(), 20160);
        assert_eq!(g.group.order(), 120960);
        assert!(g.design.is_preserved_by(&g.group));
    }

    #[test]
    fn affine_designs() {
        let c = ag_design(3, 2, GroupLevel::Special).unwrap();
        assert_eq!(params(&c), (8, 14, Some(4), Some(3)));
        assert_eq!(c.design.parameters().mu, Some(2));
        assert_eq!(c.group.order(), 1344);
        let c = ag_design(2, 4, GroupLevel::Semilinear).unwrap();
        assert_eq!(params(&c), (16, 20, Some(4), Some(1)));
        assert_eq!(c.group.order(), 16 * 180 * 2);
        let c = ag_design(3, 3, GroupLevel::Special).unwrap();
        assert_eq!(params(&c), (27, 39, Some(9), Some(4)));
        assert_eq!(c.design.parameters().mu, Some(3));
        assert_eq!(c.translations.as_ref().unwrap().order(), 27);
        assert!(c.translations.as_ref().unwrap().is_subgroup_of(&c.group));
    }
}
