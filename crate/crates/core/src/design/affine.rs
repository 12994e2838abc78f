use super::Design;
use crate::error::Result;
use crate::permgroup::GeneratedGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicelyAffineReport {
    pub holds: bool,
    pub transitive_on_points: bool,
    /// Orbits of the group on blocks, as block indices, ordered by least member.
    pub orbit_partition: Vec<Vec<usize>>,
    /// Common intersection size of blocks in different orbits.
    pub mu: Option<usize>,
}

/// Whether the block set splits into parallel classes, the orbits of `group`, with blocks
/// in different classes meeting in a constant number of points.
pub fn nicely_affine(design: &Design, group: &GeneratedGroup) -> Result<NicelyAffineReport> {
    let on_blocks = design.block_action(group)?;
    let orbit_partition = on_blocks.orbits();
    let transitive_on_points = group.is_transitive();
    let mut class = vec![0usize; design.b()];
    for (c, orbit) in orbit_partition.iter().enumerate() {
        for &j in orbit {
            class[j] = c;
        }
    }
    let rows = design.block_rows();
    let mut within_disjoint = true;
    let mut across: Option<usize> = None;
    let mut across_constant = true;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let meet = rows[i].intersection_count(&rows[j]);
            if class[i] == class[j] {
                within_disjoint &= meet == 0;
            } else {
                match across {
                    None => across = Some(meet),
                    Some(m) if m != meet => across_constant = false,
                    _ => {}
                }
            }
        }
    }
    let mu = if across_constant { across } else { None };
    let holds = transitive_on_points && within_disjoint && mu.is_some();
    Ok(NicelyAffineReport {
        holds,
        transitive_on_points,
        orbit_partition,
        mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::tests::fano;
    use crate::permgroup::Permutation;

    fn ag32() -> (Design, GeneratedGroup) {
        // affine planes x_i = c and x_i + x_j = c, x_0 + x_1 + x_2 = c in GF(2)^3
        let mut blocks = Vec::new();
        for a in 1u32..8 {
            for c in 0..2 {
                blocks.push((0u32..8).filter(|x| (x & a).count_ones() % 2 == c).collect());
            }
        }
        let d = Design::new(8, blocks, "AG(3,2)").unwrap();
        let gens = [1u32, 2, 4]
            .iter()
            .map(|&t| Permutation::from_images((0..8).map(|x| x ^ t).collect()).unwrap())
            .collect();
        (d, GeneratedGroup::new(8, gens, "2^3").unwrap())
    }

    #[test]
    fn affine_space_is_nicely_affine() {
        let (d, n) = ag32();
        let r = nicely_affine(&d, &n).unwrap();
        assert!(r.holds);
        assert_eq!(r.mu, Some(2));
        assert_eq!(r.orbit_partition.len(), 7);
        assert!(r.orbit_partition.iter().all(|o| o.len() == 2));
    }

    #[test]
    fn identity_group_fails() {
        let (d, _) = ag32();
        let r = nicely_affine(&d, &GeneratedGroup::trivial(8)).unwrap();
        assert!(!r.holds);
        assert!(!r.transitive_on_points);
    }

    #[test]
    fn non_preserving_group_is_an_error() {
        let t = Permutation::from_cycles(7, &[&[0, 1]]).unwrap();
        let g = GeneratedGroup::new(7, vec![t], "t").unwrap();
        assert!(nicely_affine(&fano(), &g).is_err());
    }
}
