//! Alt(7) acting 2-transitively on 15 points, in two independent realisations.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::sporadic::load_matrix_group;
use super::Construction;
use crate::algebra::{projective_objects, LinearDomain, ObjectKind, ProjectiveSpace};
use crate::data::DataSource;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::{coset_action, GeneratedGroup, Permutation};

/// Hyperplanes of PG(3,2) with Alt(7) given by bundled matrices in GL(4,2).
pub fn alt7_matrix_pg32(data: &DataSource) -> Result<Construction> {
    let file = load_matrix_group("alt7_gl42.mat", data)?;
    let field = Arc::clone(&file.field);
    if field.order() != 2 || file.dim != 4 {
        return Err(Error::InvalidArgument("Alt(7) matrices must lie in GL(4,2)".into()));
    }
    let pg = ProjectiveSpace::new(field.clone(), 4)?;
    let blocks = pg.point_sets(&projective_objects(&field, 4, ObjectKind::Hyperplanes)?);
    let design = Design::new(15, blocks, "PG(3,2) hyperplanes")?;
    let group = file.action(LinearDomain::ProjectivePoints)?;
    Ok(Construction::new(design, group))
}

/// The coset realisation together with the data it was built from.
#[derive(Clone, Debug)]
pub struct Alt7Coset {
    pub construction: Construction,
    /// Order of the Fano-plane stabilizer whose cosets are the points.
    pub point_stabilizer_order: u128,
    /// Orbit sizes of the second Fano stabilizer on the 15 cosets.
    pub block_stabilizer_orbits: Vec<usize>,
}

fn fano_stabilizer() -> Result<Vec<Permutation>> {
    let shift = Permutation::from_images((0..7).map(|x| (x + 1) % 7).collect())?;
    let double = Permutation::from_images((0..7).map(|x| (2 * x) % 7).collect())?;
    let swap = Permutation::from_cycles(7, &[&[2, 4], &[5, 6]])?;
    Ok(vec![shift, double, swap])
}

/// Alt(7) on the 15 cosets of the stabilizer `H` of the Fano plane with lines
/// `{i, i+1, i+3}`. The stabilizer of the plane's image under `x ↦ -x` lies in the
/// other conjugacy class of such subgroups; its orbit of length 7 on cosets is a block.
pub fn alt7_coset_pg32() -> Result<Alt7Coset> {
    let alt7 = GeneratedGroup::alternating(7);
    let h_gens = fano_stabilizer()?;
    let h = alt7.subgroup(h_gens.clone(), "PSL(3,2)")?;
    let negate = Permutation::from_images((0..7).map(|x| (7 - x) % 7).collect())?;
    let k_gens: Vec<Permutation> = h_gens
        .iter()
        .map(|g| negate.inverse().compose(g).compose(&negate))
        .collect();
    let k = alt7.subgroup(k_gens, "PSL(3,2)'")?;
    let action = coset_action(&alt7, &h)?;
    let k_on_cosets = GeneratedGroup::new(
        action.group.degree(),
        k.generators()
            .iter()
            .map(|g| action.image(g))
            .collect::<Result<Vec<_>>>()?,
        "K",
    )?;
    let orbits = k_on_cosets.orbits();
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let base: Vec<u32> = orbits
        .iter()
        .find(|o| o.len() == 7)
        .ok_or_else(|| Error::InvalidDesign("no orbit of length 7 on cosets".into()))?
        .iter()
        .map(|&x| x as u32)
        .collect();

    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut queue = vec![base];
    while let Some(block) = queue.pop() {
        if !seen.insert(block.clone()) {
            continue;
        }
        for g in action.group.generators() {
            queue.push(g.image_of_set(&block));
        }
    }
    let design = Design::new(action.group.degree(), seen.into_iter().collect(), "Alt(7) coset design")?;
    let group = action.group.clone().with_label("Alt(7)");
    Ok(Alt7Coset {
        construction: Construction::new(design, group),
        point_stabilizer_order: h.order(),
        block_stabilizer_orbits: sizes,
    })
}
