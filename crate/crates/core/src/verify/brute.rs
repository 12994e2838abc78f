use rayon::prelude::*;

use super::{Mode, PairSet, PairwiseReport};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::{orbit_count_on_pairs, GeneratedGroup};

/// Upper bound on `v² + vb + b²`, the number of ordered pairs examined.
pub const BRUTE_PAIR_BOUND: usize = 1_000_000;

/// Orbit counts on all five pair sets, by union-find over generator images.
pub fn brute_verify(design: &Design, group: &GeneratedGroup) -> Result<PairwiseReport> {
    let (v, b) = (design.v(), design.b());
    let pairs = v * v + v * b + b * b;
    if pairs > BRUTE_PAIR_BOUND {
        return Err(Error::PairBound {
            pairs,
            bound: BRUTE_PAIR_BOUND,
        });
    }
    let combined = design.combined_action(group)?;
    let rows = design.block_rows();
    let meets: Vec<bool> = (0..b * b)
        .map(|ij| rows[ij / b].intersection_count(&rows[ij % b]) > 0)
        .collect();
    let points: Vec<usize> = (0..v).collect();
    let blocks: Vec<usize> = (v..v + b).collect();
    let incident = |x: usize, y: usize| design.is_incident(x, y - v);
    let meet = |x: usize, y: usize| meets[(x - v) * b + (y - v)];

    let counts: Vec<usize> = PairSet::ALL
        .par_iter()
        .map(|set| match set {
            PairSet::PointPairs => orbit_count_on_pairs(&combined, &points, &points, |x, y| x != y),
            PairSet::Flags => orbit_count_on_pairs(&combined, &points, &blocks, incident),
            PairSet::Antiflags => {
                orbit_count_on_pairs(&combined, &points, &blocks, |x, y| !incident(x, y))
            }
            PairSet::IntersectingBlocks => {
                orbit_count_on_pairs(&combined, &blocks, &blocks, |x, y| x != y && meet(x, y))
            }
            PairSet::DisjointBlocks => {
                orbit_count_on_pairs(&combined, &blocks, &blocks, |x, y| !meet(x, y))
            }
        })
        .collect::<Result<_>>()?;
    let counts: [usize; 5] = counts.try_into().expect("five pair sets");
    let nonempty = counts.map(|c| c > 0);
    Ok(PairwiseReport {
        method: Mode::Brute,
        nonempty,
        orbit_counts: Some(counts),
        fast: None,
        verdict: counts.iter().all(|&c| c <= 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    fn complete(v: u32, k: usize) -> Design {
        let blocks = (0u32..1 << v)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..v).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        Design::new(v as usize, blocks, format!("C({v},{k})")).unwrap()
    }

    #[test]
    fn complete_six_three_splits_intersecting_pairs() {
        let r = brute_verify(&complete(6, 3), &GeneratedGroup::symmetric(6)).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.orbit_counts, Some([1, 1, 1, 2, 1]));
    }

    #[test]
    fn near_complete_has_no_disjoint_pairs() {
        let r = brute_verify(&complete(7, 6), &GeneratedGroup::symmetric(7)).unwrap();
        assert!(r.verdict);
        assert_eq!(r.count(PairSet::DisjointBlocks), Some(0));
        assert!(!r.nonempty[4]);
    }

    #[test]
    fn cyclic_group_is_too_small_for_fano() {
        let lines = (0..7u32).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        let d = Design::new(7, lines, "fano").unwrap();
        let shift = Permutation::from_images((0..7).map(|i| (i + 1) % 7).collect()).unwrap();
        let g = GeneratedGroup::new(7, vec![shift], "C7").unwrap();
        let r = brute_verify(&d, &g).unwrap();
        assert!(!r.verdict);
        // 42 ordered point pairs in orbits of 7
        assert_eq!(r.count(PairSet::PointPairs), Some(6));
        assert_eq!(r.count(PairSet::Flags), Some(3));
        assert_eq!(r.count(PairSet::DisjointBlocks), Some(0));
    }
}
