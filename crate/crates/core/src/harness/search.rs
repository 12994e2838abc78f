//! Exhaustive search over the orbits of a small group on `k`-subsets.

use std::fmt;
use std::ops::RangeInclusive;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::GeneratedGroup;
use crate::util::{binomial, BitSet, SubsetRanker};
use crate::verify::{verify, Mode};

pub const MAX_SEARCH_DEGREE: usize = 20;

/// An orbit of `k`-subsets forming a 2-design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub group_label: String,
    pub degree: usize,
    pub k: usize,
    /// Least orbit member in colex order.
    pub representative: Vec<u32>,
    pub b: usize,
    pub r: usize,
    pub lambda: usize,
    /// Only computed for hits.
    pub mu: Option<usize>,
    pub verdict: bool,
    /// `None` when `|G| < b(b-1)/2` already rules out transitivity on block pairs.
    pub method: Option<Mode>,
}

impl SearchResult {
    pub fn is_hit(&self) -> bool {
        self.verdict
    }
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} degree {} k {}: 2-({},{},{}) b={} r={}",
            self.group_label, self.degree, self.k, self.degree, self.k, self.lambda, self.b, self.r
        )?;
        if let Some(mu) = self.mu {
            write!(f, " mu={mu}")?;
        }
        let reps: Vec<String> = self.representative.iter().map(u32::to_string).collect();
        write!(f, " block {{{}}} pairwise transitive: {}", reps.join(" "), if self.verdict { "yes" } else { "no" })
    }
}

/// All orbits on `k`-subsets, each as a list of subsets in colex order.
pub fn subset_orbits(group: &GeneratedGroup, k: usize) -> Result<Vec<Vec<Vec<u32>>>> {
    let n = group.degree();
    if n > MAX_SEARCH_DEGREE {
        return Err(Error::SearchBound(format!("degree {n} exceeds {MAX_SEARCH_DEGREE}")));
    }
    let total = binomial(n as u64, k as u64) as usize;
    let ranker = SubsetRanker::new(n, k);
    let mut processed = BitSet::new(total);
    let mut orbits = Vec::new();
    for start in 0..total {
        if processed.contains(start) {
            continue;
        }
        processed.insert(start);
        let mut members = vec![start];
        let mut stack = vec![ranker.unrank(start as u64, k)];
        while let Some(set) = stack.pop() {
            for g in group.generators() {
                let image = g.image_of_set(&set);
                let idx = ranker.rank(&image) as usize;
                if !processed.contains(idx) {
                    processed.insert(idx);
                    members.push(idx);
                    stack.push(image);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members.into_iter().map(|r| ranker.unrank(r as u64, k)).collect());
    }
    Ok(orbits)
}

/// `(r, λ)` when the blocks form a 2-design.
fn pair_counts(n: usize, blocks: &[Vec<u32>]) -> Option<(usize, usize)> {
    let mut points = vec![0usize; n];
    let mut pairs = vec![0usize; n * n];
    for block in blocks {
        for (i, &x) in block.iter().enumerate() {
            points[x as usize] += 1;
            for &y in &block[i + 1..] {
                pairs[x as usize * n + y as usize] += 1;
            }
        }
    }
    let r = points[0];
    let lambda = pairs[1];
    let uniform = points.iter().all(|&c| c == r)
        && (0..n).all(|x| (x + 1..n).all(|y| pairs[x * n + y] == lambda));
    uniform.then_some((r, lambda))
}

/// Every orbit 2-design with block size in `ks`, tested for pairwise transitivity.
/// Requires degree at most [`MAX_SEARCH_DEGREE`] and `3 <= k <= degree/2`.
pub fn search_small(group: &GeneratedGroup, ks: RangeInclusive<usize>) -> Result<Vec<SearchResult>> {
    let n = group.degree();
    if n > MAX_SEARCH_DEGREE {
        return Err(Error::SearchBound(format!("degree {n} exceeds {MAX_SEARCH_DEGREE}")));
    }
    if *ks.start() < 3 || *ks.end() > n / 2 {
        return Err(Error::InvalidArgument(format!(
            "block sizes {}..={} outside 3..={}",
            ks.start(),
            ks.end(),
            n / 2
        )));
    }
    let order = group.order();
    let mut out = Vec::new();
    for k in ks {
        for orbit in subset_orbits(group, k)? {
            let Some((r, lambda)) = pair_counts(n, &orbit) else {
                continue;
            };
            let b = orbit.len();
            let mut result = SearchResult {
                group_label: group.label().to_string(),
                degree: n,
                k,
                representative: orbit[0].clone(),
                b,
                r,
                lambda,
                mu: None,
                verdict: false,
                method: None,
            };
            if order >= (b * (b - 1) / 2) as u128 {
                let design = Design::new(n, orbit, format!("{}-orbit of {:?}", group.label(), result.representative))?;
                let report = verify(&design, group, Mode::Both).or_else(|e| match e {
                    Error::PairBound { .. } => verify(&design, group, Mode::Fast),
                    e => Err(e),
                })?;
                result.verdict = report.verdict;
                result.method = Some(report.method);
                if report.verdict {
                    result.mu = design.parameters().mu;
                }
            }
            out.push(result);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::binomial;

    #[test]
    fn orbits_partition_the_subsets() {
        let g = GeneratedGroup::alternating(7);
        for k in 1..=4 {
            let orbits = subset_orbits(&g, k).unwrap();
            assert_eq!(orbits.len(), 1);
            assert_eq!(orbits[0].len() as u128, binomial(7, k as u64));
        }
        let c5 = GeneratedGroup::new(
            5,
            vec![crate::permgroup::Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap()],
            "C5",
        )
        .unwrap();
        // 10 pairs in two orbits of length 5
        assert_eq!(subset_orbits(&c5, 2).unwrap().len(), 2);
    }

    #[test]
    fn symmetric_group_has_no_hits() {
        let hits = search_small(&GeneratedGroup::symmetric(6), 3..=3).unwrap();
        assert_eq!(hits.len(), 1);
        assert!(!hits[0].verdict);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            search_small(&GeneratedGroup::symmetric(21), 3..=3),
            Err(Error::SearchBound(_))
        ));
        assert!(search_small(&GeneratedGroup::symmetric(6), 2..=3).is_err());
        assert!(search_small(&GeneratedGroup::symmetric(6), 3..=4).is_err());
    }
}
