use crate::design::{nicely_affine, Design, NicelyAffineReport};
use crate::error::Result;
use crate::permgroup::{action_report, GeneratedGroup, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DesignShape {
    Symmetric,
    Quasisymmetric(usize, usize),
    Other,
}

/// How an imprimitive block action arises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImprimitiveCase {
    /// The kernel on the block system is nontrivial and the design is nicely affine for it.
    NicelyAffine { parallel_classes: usize, mu: usize },
    /// The group acts faithfully on the block system.
    Quasiprimitive,
    /// Neither of the above; cannot happen for a pairwise transitive design.
    Unclassified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockActionReport {
    /// Groups are given by their action on points, so this always holds.
    pub faithful_on_points: bool,
    pub faithful_on_blocks: bool,
    pub transitive_on_blocks: bool,
    pub rank_on_blocks: usize,
    pub block_suborbit_sizes: Vec<usize>,
    pub primitive_on_blocks: bool,
    /// Part sizes of the minimal block system on blocks, when imprimitive.
    pub block_system: Option<(usize, usize)>,
    pub shape: DesignShape,
    pub imprimitive_case: Option<ImprimitiveCase>,
    /// Orbit sizes on points of the stabilizer of block 0, ascending.
    pub block_stabilizer_orbits: Vec<usize>,
    /// The nicely-affine test for a supplied normal subgroup, typically the translations.
    pub nicely_affine: Option<NicelyAffineReport>,
}

pub fn classify_block_action(
    design: &Design,
    group: &GeneratedGroup,
    translations: Option<&GeneratedGroup>,
) -> Result<BlockActionReport> {
    let params = design.parameters();
    let on_blocks = design.block_action(group)?;
    let report = action_report(&on_blocks)?;
    let shape = if params.is_symmetric() {
        DesignShape::Symmetric
    } else if let Some((x, y)) = params.quasisymmetric_sizes() {
        DesignShape::Quasisymmetric(x, y)
    } else {
        DesignShape::Other
    };

    let v = design.v();
    let combined = design.combined_action(group)?;
    let mut block_stabilizer_orbits: Vec<usize> = combined
        .point_stabilizer(v)?
        .orbits()
        .into_iter()
        .filter(|o| o[0] < v)
        .map(|o| o.len())
        .collect();
    block_stabilizer_orbits.sort_unstable();

    let imprimitive_case = match &report.minimal_block_system {
        Some(parts) => Some(imprimitive_case(design, group, &on_blocks, parts)?),
        None => None,
    };
    let nicely_affine = translations.map(|n| nicely_affine(design, n)).transpose()?;
    Ok(BlockActionReport {
        faithful_on_points: true,
        faithful_on_blocks: on_blocks.order() == group.order(),
        transitive_on_blocks: report.transitive,
        rank_on_blocks: report.rank,
        block_suborbit_sizes: report.suborbit_sizes.clone(),
        primitive_on_blocks: report.primitive,
        block_system: report
            .minimal_block_system
            .as_ref()
            .map(|parts| (parts.len(), parts[0].len())),
        shape,
        imprimitive_case,
        block_stabilizer_orbits,
        nicely_affine,
    })
}

/// Uses the kernel of the action on the block system.
fn imprimitive_case(
    design: &Design,
    group: &GeneratedGroup,
    on_blocks: &GeneratedGroup,
    parts: &[Vec<usize>],
) -> Result<ImprimitiveCase> {
    let mut part_of = vec![0u32; design.b()];
    for (i, part) in parts.iter().enumerate() {
        for &j in part {
            part_of[j] = i as u32;
        }
    }
    // points followed by parts; the kernel fixes every part
    let v = design.v();
    let gens = group
        .generators()
        .iter()
        .zip(on_blocks.generators())
        .map(|(g, h)| {
            let mut images = g.images().to_vec();
            for part in parts {
                images.push(v as u32 + part_of[h.apply(part[0])]);
            }
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let extended = GeneratedGroup::new(v + parts.len(), gens, group.label())?;
    let fixed: Vec<usize> = (v..v + parts.len()).collect();
    let kernel = extended
        .pointwise_stabilizer(&fixed)?
        .restrict(&(0..v).collect::<Vec<_>>())?;
    if kernel.order() == 1 {
        return Ok(ImprimitiveCase::Quasiprimitive);
    }
    let report = nicely_affine(design, &kernel)?;
    Ok(match (report.holds, report.mu) {
        (true, Some(mu)) => ImprimitiveCase::NicelyAffine {
            parallel_classes: report.orbit_partition.len(),
            mu,
        },
        _ => ImprimitiveCase::Unclassified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ag32() -> (Design, GeneratedGroup, GeneratedGroup) {
        let mut blocks = Vec::new();
        for a in 1u32..8 {
            for c in 0..2 {
                blocks.push((0u32..8).filter(|x| (x & a).count_ones() % 2 == c).collect());
            }
        }
        let d = Design::new(8, blocks, "AG(3,2)").unwrap();
        let translations: Vec<Permutation> = [1u32, 2, 4]
            .iter()
            .map(|&t| Permutation::from_images((0..8).map(|x| x ^ t).collect()).unwrap())
            .collect();
        // x -> Ax with A a Singer cycle of GF(2)^3 (x -> 2x in GF(8) mod x^3+x+1)
        let singer = Permutation::from_images(
            (0u32..8)
                .map(|x| {
                    let y = x << 1;
                    if y & 8 != 0 {
                        y ^ 0b1011
                    } else {
                        y
                    }
                })
                .collect(),
        )
        .unwrap();
        let swap = Permutation::from_images(
            (0u32..8).map(|x| (x & 4) | (x & 1) << 1 | (x & 2) >> 1).collect(),
        )
        .unwrap();
        let mut gens = translations.clone();
        gens.extend([singer, swap]);
        let g = GeneratedGroup::new(8, gens, "AGL(3,2)").unwrap();
        let n = GeneratedGroup::new(8, translations, "2^3").unwrap();
        (d, g, n)
    }

    #[test]
    fn affine_space_is_imprimitive_of_affine_type() {
        let (d, g, n) = ag32();
        assert_eq!(g.order(), 1344);
        let r = classify_block_action(&d, &g, Some(&n)).unwrap();
        assert_eq!(r.rank_on_blocks, 3);
        assert_eq!(r.shape, DesignShape::Quasisymmetric(0, 2));
        assert!(!r.primitive_on_blocks);
        assert_eq!(r.block_system, Some((7, 2)));
        assert_eq!(
            r.imprimitive_case,
            Some(ImprimitiveCase::NicelyAffine {
                parallel_classes: 7,
                mu: 2
            })
        );
        assert!(r.nicely_affine.unwrap().holds);
        assert_eq!(r.block_stabilizer_orbits, vec![4, 4]);
        assert!(r.faithful_on_blocks);
    }
}
