//! Rank, suborbits, block systems, transitivity degree and orbit counting on pairs.

use super::group::GeneratedGroup;
use crate::error::{Error, Result};
use crate::util::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub degree: usize,
    pub transitive: bool,
    pub rank: usize,
    pub two_transitive: bool,
    /// Orbit sizes of the stabilizer of point 0, ordered by least orbit point.
    pub suborbit_sizes: Vec<usize>,
    pub primitive: bool,
    pub minimal_block_system: Option<Vec<Vec<usize>>>,
}

/// Orbits of the stabilizer of `point`, ordered by least element.
pub fn suborbits(group: &GeneratedGroup, point: usize) -> Result<Vec<Vec<usize>>> {
    Ok(group.point_stabilizer(point)?.orbits())
}

pub fn action_report(group: &GeneratedGroup) -> Result<ActionReport> {
    let degree = group.degree();
    if degree == 0 {
        return Err(Error::InvalidArgument("empty domain".into()));
    }
    let transitive = group.is_transitive();
    let subs = suborbits(group, 0)?;
    let rank = subs.len();
    let (primitive, minimal_block_system) = if !transitive {
        (false, None)
    } else {
        match minimal_block_system_from(group, &subs) {
            Some(parts) => (false, Some(parts)),
            None => (true, None),
        }
    };
    Ok(ActionReport {
        degree,
        transitive,
        rank,
        two_transitive: transitive && rank == 2,
        suborbit_sizes: subs.iter().map(|o| o.len()).collect(),
        primitive,
        minimal_block_system,
    })
}

/// Finest block system in which `a` and `b` share a block.
pub fn block_system_joining(group: &GeneratedGroup, a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = group.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    if uf.union(a, b) {
        queue.push((a, b));
    }
    while let Some((x, y)) = queue.pop() {
        for g in group.generators() {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if uf.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    uf.classes()
}

/// Least `x` such that the system joining 0 and `x` is nontrivial, and that system.
pub fn minimal_block_system(group: &GeneratedGroup) -> Result<Option<Vec<Vec<usize>>>> {
    if !group.is_transitive() {
        return Err(Error::InvalidArgument(
            "block systems require a transitive group".into(),
        ));
    }
    let subs = suborbits(group, 0)?;
    Ok(minimal_block_system_from(group, &subs))
}

fn minimal_block_system_from(
    group: &GeneratedGroup,
    subs: &[Vec<usize>],
) -> Option<Vec<Vec<usize>>> {
    // Suborbits are sorted by least element, and the system depends only on the suborbit.
    for orbit in subs {
        let x = orbit[0];
        if x == 0 {
            continue;
        }
        let parts = block_system_joining(group, 0, x);
        if parts.len() > 1 {
            return Some(parts);
        }
    }
    None
}

/// Largest `t` (up to `cap`) with the group `t`-transitive.
pub fn transitivity_degree(group: &GeneratedGroup, cap: usize) -> usize {
    let n = group.degree();
    if n == 0 || !group.is_transitive() {
        return 0;
    }
    let cap = cap.min(n);
    let base: Vec<usize> = (0..cap).collect();
    let chain = group.chain_with_base(&base);
    let lengths = chain.basic_orbit_lengths();
    let mut t = 0;
    for (i, &len) in lengths.iter().take(cap).enumerate() {
        if len == n - i {
            t += 1;
        } else {
            break;
        }
    }
    t
}

/// Number of orbits on `{(x, y) : x in left, y in right, relation(x, y)}`, where `left`
/// and `right` are subsets of the group's domain. The qualifying set must be invariant.
pub fn orbit_count_on_pairs<F>(
    group: &GeneratedGroup,
    left: &[usize],
    right: &[usize],
    relation: F,
) -> Result<usize>
where
    F: Fn(usize, usize) -> bool,
{
    let n = group.degree();
    let mut left_pos = vec![usize::MAX; n];
    let mut right_pos = vec![usize::MAX; n];
    for (i, &x) in left.iter().enumerate() {
        if x >= n {
            return Err(Error::PointOutOfRange { point: x, degree: n });
        }
        left_pos[x] = i;
    }
    for (j, &y) in right.iter().enumerate() {
        if y >= n {
            return Err(Error::PointOutOfRange { point: y, degree: n });
        }
        right_pos[y] = j;
    }
    let width = right.len();
    let size = left.len() * width;
    let mut qualifies = vec![false; size];
    let mut count = 0usize;
    for (i, &x) in left.iter().enumerate() {
        for (j, &y) in right.iter().enumerate() {
            if relation(x, y) {
                qualifies[i * width + j] = true;
                count += 1;
            }
        }
    }
    if count == 0 {
        return Ok(0);
    }
    let mut uf = UnionFind::new(size);
    for (i, &x) in left.iter().enumerate() {
        for (j, &y) in right.iter().enumerate() {
            let idx = i * width + j;
            if !qualifies[idx] {
                continue;
            }
            for g in group.generators() {
                let (gi, gj) = (left_pos[g.apply(x)], right_pos[g.apply(y)]);
                if gi == usize::MAX || gj == usize::MAX || !qualifies[gi * width + gj] {
                    return Err(Error::NotInvariant);
                }
                uf.union(idx, gi * width + gj);
            }
        }
    }
    Ok((0..size).filter(|&idx| qualifies[idx] && uf.find(idx) == idx).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    #[test]
    fn symmetric_is_two_transitive_and_primitive() {
        let r = action_report(&GeneratedGroup::symmetric(6)).unwrap();
        assert!(r.transitive && r.two_transitive && r.primitive);
        assert_eq!(r.rank, 2);
        assert_eq!(r.suborbit_sizes, vec![1, 5]);
    }

    #[test]
    fn dihedral_square_is_imprimitive() {
        let d8 = GeneratedGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 3]]).unwrap(),
            ],
            "D8",
        )
        .unwrap();
        let r = action_report(&d8).unwrap();
        assert_eq!(r.rank, 3);
        assert!(!r.primitive);
        assert_eq!(r.minimal_block_system, Some(vec![vec![0, 2], vec![1, 3]]));
    }

    #[test]
    fn intransitive_report() {
        let g = GeneratedGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()],
            "c2",
        )
        .unwrap();
        let r = action_report(&g).unwrap();
        assert!(!r.transitive && !r.primitive && !r.two_transitive);
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn transitivity_degrees() {
        assert_eq!(transitivity_degree(&GeneratedGroup::symmetric(6), 6), 6);
        assert_eq!(transitivity_degree(&GeneratedGroup::alternating(6), 6), 4);
    }

    #[test]
    fn sym3_on_distinct_pairs() {
        let s3 = GeneratedGroup::symmetric(3);
        let pts = [0, 1, 2];
        assert_eq!(orbit_count_on_pairs(&s3, &pts, &pts, |x, y| x != y).unwrap(), 1);
        assert_eq!(orbit_count_on_pairs(&s3, &pts, &pts, |_, _| false).unwrap(), 0);
        assert!(orbit_count_on_pairs(&s3, &pts, &pts, |x, y| x < y).is_err());
    }
}
