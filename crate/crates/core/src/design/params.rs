use std::collections::BTreeMap;
use std::fmt;

use super::Design;
use crate::util::BitSet;

/// Largest `t` tested for the t-design property.
pub const T_MAX_CAP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignParameters {
    pub v: usize,
    pub b: usize,
    /// Common block size.
    pub k: Option<usize>,
    /// Common replication number.
    pub r: Option<usize>,
    /// Pair count, when the structure is a 2-design.
    pub lambda: Option<usize>,
    /// Largest `t <= T_MAX_CAP` for which every `t`-subset lies in the same number of blocks.
    pub t_max: usize,
    /// `lambdas[t - 1]` is the `t`-subset count for `t <= t_max`.
    pub lambdas: Vec<usize>,
    /// Intersection size of unordered pairs of distinct blocks, with multiplicities.
    pub intersection_profile: BTreeMap<usize, usize>,
    /// The nonzero intersection size of a quasisymmetric design with disjoint blocks.
    pub mu: Option<usize>,
}

impl DesignParameters {
    pub fn is_two_design(&self) -> bool {
        self.lambda.is_some()
    }

    /// Distinct intersection sizes, ascending.
    pub fn intersection_numbers(&self) -> Vec<usize> {
        self.intersection_profile.keys().copied().collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_two_design() && self.b == self.v
    }

    /// The two intersection sizes, when there are exactly two.
    pub fn quasisymmetric_sizes(&self) -> Option<(usize, usize)> {
        match self.intersection_numbers()[..] {
            [x, y] if self.is_two_design() => Some((x, y)),
            _ => None,
        }
    }

    pub fn is_quasisymmetric(&self) -> bool {
        self.quasisymmetric_sizes().is_some()
    }

    /// Non-trivial means `2 < k < v`.
    pub fn is_trivial(&self) -> bool {
        !matches!(self.k, Some(k) if 2 < k && k < self.v)
    }

    /// `(v-1)λ = r(k-1)` and `bk = vr`; for symmetric designs also `(v-1)λ = k(k-1)`.
    pub fn identities_hold(&self) -> bool {
        let (Some(k), Some(r), Some(lambda)) = (self.k, self.r, self.lambda) else {
            return false;
        };
        let general = (self.v - 1) * lambda == r * (k - 1) && self.b * k == self.v * r;
        general && (!self.is_symmetric() || (self.v - 1) * lambda == k * (k - 1))
    }

    /// Fisher's inequality `b >= v`, which only constrains non-trivial 2-designs.
    pub fn fisher_holds(&self) -> bool {
        !self.is_two_design() || self.is_trivial() || self.b >= self.v
    }
}

impl fmt::Display for DesignParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k, self.lambda) {
            (Some(k), Some(lambda)) => write!(f, "2-({},{},{})", self.v, k, lambda),
            _ => write!(f, "(v={}, b={}) not a t-design (t>=2)", self.v, self.b),
        }
    }
}

impl Design {
    pub fn parameters(&self) -> DesignParameters {
        let k = self.block_size();
        let rows = self.point_rows();
        let mut lambdas = Vec::new();
        if let Some(k) = k {
            for t in 1..=T_MAX_CAP.min(k) {
                match uniform_count(&rows, t, self.b()) {
                    Some(l) => lambdas.push(l),
                    None => break,
                }
            }
        }
        let t_max = lambdas.len();
        let profile = intersection_profile(self);
        let numbers: Vec<usize> = profile.keys().copied().collect();
        let lambda = lambdas.get(1).copied();
        let mu = match numbers[..] {
            [0, m] if lambda.is_some() => Some(m),
            _ => None,
        };
        DesignParameters {
            v: self.v(),
            b: self.b(),
            k,
            r: lambdas.first().copied(),
            lambda,
            t_max,
            lambdas,
            intersection_profile: profile,
            mu,
        }
    }
}

fn intersection_profile(design: &Design) -> BTreeMap<usize, usize> {
    let rows = design.block_rows();
    let mut profile = BTreeMap::new();
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            *profile.entry(a.intersection_count(b)).or_insert(0) += 1;
        }
    }
    profile
}

/// The common number of blocks through every `t`-subset of points, if there is one.
fn uniform_count(rows: &[BitSet], t: usize, b: usize) -> Option<usize> {
    let v = rows.len();
    if t > v {
        return None;
    }
    let mut stack: Vec<BitSet> = vec![BitSet::full(b); t + 1];
    let mut chosen = vec![0usize; t];
    let mut target = None;
    // Depth-first walk over t-subsets in lexicographic order.
    let mut depth = 0;
    chosen[0] = 0;
    loop {
        if chosen[depth] + (t - depth) > v {
            if depth == 0 {
                return target;
            }
            depth -= 1;
            chosen[depth] += 1;
            continue;
        }
        let (lower, upper) = stack.split_at_mut(depth + 1);
        lower[depth].and_into(&rows[chosen[depth]], &mut upper[0]);
        if depth + 1 == t {
            let c = upper[0].count();
            match target {
                None => target = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
            chosen[depth] += 1;
        } else {
            chosen[depth + 1] = chosen[depth] + 1;
            depth += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::tests::fano;
    use crate::util::binomial;
    use proptest::prelude::*;

    fn complete(v: u32, k: usize) -> Design {
        let mut blocks = Vec::new();
        for mask in 0u32..1 << v {
            if mask.count_ones() as usize == k {
                blocks.push((0..v).filter(|i| mask >> i & 1 == 1).collect());
            }
        }
        Design::new(v as usize, blocks, "complete").unwrap()
    }

    #[test]
    fn fano_plane() {
        let p = fano().parameters();
        assert_eq!((p.v, p.b, p.k, p.r, p.lambda), (7, 7, Some(3), Some(3), Some(1)));
        assert_eq!(p.t_max, 2);
        assert!(p.is_symmetric());
        assert_eq!(p.intersection_numbers(), vec![1]);
        assert_eq!(p.mu, None);
        assert!(p.identities_hold());
        assert_eq!(p.to_string(), "2-(7,3,1)");
    }

    #[test]
    fn single_full_block() {
        let d = Design::new(4, vec![vec![0, 1, 2, 3]], "one").unwrap();
        let p = d.parameters();
        assert_eq!(p.k, Some(4));
        assert_eq!(p.lambda, Some(1));
        assert_eq!(p.t_max, 4);
        assert!(p.is_trivial());
        assert!(p.intersection_profile.is_empty());
    }

    #[test]
    fn unequal_blocks() {
        let d = Design::new(4, vec![vec![0, 1], vec![1, 2, 3]], "ragged").unwrap();
        let p = d.parameters();
        assert_eq!(p.k, None);
        assert_eq!(p.t_max, 0);
        assert!(!p.is_two_design());
        assert!(p.to_string().contains("not a t-design"));
    }

    #[test]
    fn complete_designs_are_k_designs() {
        let p = complete(7, 3).parameters();
        assert_eq!(p.t_max, 3);
        assert_eq!(p.lambdas, vec![15, 5, 1]);
        assert_eq!(p.lambda, Some(5));
        assert_eq!(p.intersection_numbers(), vec![0, 1, 2]);
        assert!(!p.is_quasisymmetric());
    }

    proptest! {
        #[test]
        fn complete_design_counts(v in 3u32..9, k in 2usize..6) {
            prop_assume!(k <= v as usize);
            let p = complete(v, k).parameters();
            let (v, k) = (v as u64, k as u64);
            prop_assert_eq!(p.b as u128, binomial(v, k));
            prop_assert_eq!(p.r.unwrap() as u128, binomial(v - 1, k - 1));
            prop_assert_eq!(p.lambda.unwrap() as u128, binomial(v - 2, k - 2));
            prop_assert!(p.identities_hold());
            prop_assert!(p.fisher_holds());
        }
    }
}
