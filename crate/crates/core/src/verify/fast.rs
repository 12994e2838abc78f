use super::{nonempty_pair_sets, Mode, PairwiseReport};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::{suborbits, transitivity_degree, GeneratedGroup};

/// The three conditions that together are equivalent to pairwise transitivity for a
/// non-trivial 2-design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastConditions {
    /// (a) the group is 2-transitive on points.
    pub points_two_transitive: bool,
    /// Rank on blocks, `None` when intransitive on blocks.
    pub block_rank: Option<usize>,
    pub disjoint_blocks: bool,
    /// (b) rank 2 on blocks, or rank 3 with disjoint blocks present.
    pub blocks_condition: bool,
    /// (c) orbits of the stabilizer of point 0 on blocks; two are required.
    pub stabilizer_orbits_on_blocks: usize,
}

impl FastConditions {
    pub fn holds(&self) -> bool {
        self.points_two_transitive && self.blocks_condition && self.stabilizer_orbits_on_blocks == 2
    }
}

fn require_nontrivial_two_design(design: &Design) -> Result<()> {
    let params = design.parameters();
    if !params.is_two_design() {
        return Err(Error::FastRefused(format!(
            "{} is not a 2-design; use brute mode",
            design.label()
        )));
    }
    if params.is_trivial() {
        return Err(Error::FastRefused(format!(
            "{} is trivial; use brute mode",
            design.label()
        )));
    }
    Ok(())
}

pub fn fast_verify(design: &Design, group: &GeneratedGroup) -> Result<PairwiseReport> {
    require_nontrivial_two_design(design)?;
    let on_blocks = design.block_action(group)?;
    let nonempty = nonempty_pair_sets(design);
    let disjoint_blocks = nonempty[4];
    let points_two_transitive = transitivity_degree(group, 2) >= 2;
    let block_rank = if on_blocks.is_transitive() {
        Some(suborbits(&on_blocks, 0)?.len())
    } else {
        None
    };
    let blocks_condition = match block_rank {
        Some(2) => true,
        Some(3) => disjoint_blocks,
        _ => false,
    };
    let stabilizer = group.point_stabilizer(0)?;
    let stabilizer_orbits_on_blocks = design.block_action(&stabilizer)?.orbits().len();
    let conditions = FastConditions {
        points_two_transitive,
        block_rank,
        disjoint_blocks,
        blocks_condition,
        stabilizer_orbits_on_blocks,
    };
    Ok(PairwiseReport {
        method: Mode::Fast,
        nonempty,
        orbit_counts: None,
        verdict: conditions.holds(),
        fast: Some(conditions),
    })
}

/// For a symmetric design, pairwise transitivity is 2-transitivity on points.
pub fn symmetric_shortcut(design: &Design, group: &GeneratedGroup) -> Result<bool> {
    require_nontrivial_two_design(design)?;
    if !design.parameters().is_symmetric() {
        return Err(Error::FastRefused(format!("{} is not symmetric", design.label())));
    }
    design.block_action(group)?;
    Ok(transitivity_degree(group, 2) >= 2)
}
