use std::collections::HashMap;
use std::sync::OnceLock;

use super::chain::StabilizerChain;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A permutation group given by generators.
#[derive(Clone, Debug)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    label: String,
    chain: OnceLock<StabilizerChain>,
}

impl GeneratedGroup {
    /// An empty generator list stands for the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>, label: impl Into<String>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(GeneratedGroup {
            degree,
            generators,
            label: label.into(),
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new(), "1").expect("identity has the right degree")
    }

    pub fn symmetric(n: usize) -> Self {
        let label = format!("Sym({n})");
        if n < 2 {
            return Self::trivial(n).with_label(label);
        }
        let cycle: Vec<usize> = (0..n).collect();
        let gens = vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&cycle]).unwrap(),
        ];
        Self::new(n, gens, label).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let label = format!("Alt({n})");
        if n < 3 {
            return Self::trivial(n).with_label(label);
        }
        // (0 1 2) with an (n-1)- or n-cycle on the rest, whichever is even.
        let tail: Vec<usize> = if n % 2 == 1 {
            (0..n).collect()
        } else {
            (1..n).collect()
        };
        let gens = vec![
            Permutation::from_cycles(n, &[&[0, 1, 2]]).unwrap(),
            Permutation::from_cycles(n, &[&tail]).unwrap(),
        ];
        Self::new(n, gens, label).unwrap()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// Sorted orbit of `point`.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        Ok(self.orbit_marking(point, &mut seen))
    }

    fn orbit_marking(&self, point: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut orbit = vec![point];
        seen[point] = true;
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// All orbits, ordered by their least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                out.push(self.orbit_marking(x, &mut seen));
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit_marking(0, &mut vec![false; self.degree]).len() == self.degree
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators, &[]))
    }

    /// Chain with the given base prefix; reuses the cached chain when its base already
    /// starts with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabilizerChain {
        if let Some(c) = self.chain.get() {
            if c.base().starts_with(prefix) {
                return c.clone();
            }
        }
        let hint = self.chain.get().map(|c| c.order());
        StabilizerChain::build_with_order_hint(self.degree, &self.generators, prefix, hint)
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &GeneratedGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Pointwise stabilizer of `points`, acting on the same domain.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<GeneratedGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let chain = self.chain_with_base(points);
        let gens = chain.stabilizer_generators(points.len());
        let label = format!("{}_{:?}", self.label, points);
        GeneratedGroup::new(self.degree, gens, label)
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<GeneratedGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Action on an invariant subset, relabelled by position in sorted `points`.
    pub fn restrict(&self, points: &[usize]) -> Result<GeneratedGroup> {
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut index = vec![usize::MAX; self.degree];
        for (i, &p) in sorted.iter().enumerate() {
            self.check_point(p)?;
            index[p] = i;
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut images = Vec::with_capacity(sorted.len());
            for &p in &sorted {
                let i = index[g.apply(p)];
                if i == usize::MAX {
                    return Err(Error::NotInvariant);
                }
                images.push(i as u32);
            }
            gens.push(Permutation::from_images_unchecked(images));
        }
        GeneratedGroup::new(sorted.len(), gens, self.label.clone())
    }

    /// Induced action on a list of point sets, each given sorted. The list must be
    /// invariant; the `k`-th generator image of set `s` is looked up in it.
    pub fn action_on_sets(&self, sets: &[Vec<u32>]) -> Result<GeneratedGroup> {
        let lookup: HashMap<&[u32], usize> =
            sets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut images = Vec::with_capacity(sets.len());
            for s in sets {
                let img = g.image_of_set(s);
                match lookup.get(img.as_slice()) {
                    Some(&i) => images.push(i as u32),
                    None => return Err(Error::NotInvariant),
                }
            }
            gens.push(Permutation::from_images(images)?);
        }
        GeneratedGroup::new(sets.len(), gens, self.label.clone())
    }

    /// Smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> GeneratedGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut chain = StabilizerChain::build(self.degree, &gens, &[]);
        let mut queue: Vec<Permutation> = elements.to_vec();
        while let Some(x) = queue.pop() {
            if chain.contains(&x) {
                continue;
            }
            gens.push(x.clone());
            chain = StabilizerChain::build(self.degree, &gens, &[]);
            for g in &self.generators {
                queue.push(g.inverse().compose(&x).compose(g));
            }
        }
        let label = format!("ncl({})", self.label);
        let group = GeneratedGroup::new(self.degree, gens, label).unwrap();
        let _ = group.chain.set(chain);
        group
    }

    pub fn derived_subgroup(&self) -> GeneratedGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
            .with_label(format!("{}'", self.label))
    }

    /// Subgroup generated by `generators`, checked to lie in `self`.
    pub fn subgroup(&self, generators: Vec<Permutation>, label: impl Into<String>) -> Result<GeneratedGroup> {
        let label = label.into();
        let sub = GeneratedGroup::new(self.degree, generators, label.clone())?;
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotSubgroup {
                what: label,
                of: self.label.clone(),
            });
        }
        Ok(sub)
    }

    /// Group with the extra generators adjoined.
    pub fn extended(&self, extra: &[Permutation], label: impl Into<String>) -> Result<GeneratedGroup> {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        GeneratedGroup::new(self.degree, gens, label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orbit_is_everything() {
        let s4 = GeneratedGroup::symmetric(4);
        assert_eq!(s4.orbit(0).unwrap(), vec![0, 1, 2, 3]);
        assert!(s4.orbit(4).is_err());
    }

    #[test]
    fn identity_fixes_points() {
        let g = GeneratedGroup::trivial(5);
        assert_eq!(g.orbit(2).unwrap(), vec![2]);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn alternating_orders() {
        for n in 3..=8 {
            let expected: u128 = (1..=n as u128).product::<u128>() / 2;
            assert_eq!(GeneratedGroup::alternating(n).order(), expected, "n = {n}");
        }
    }

    #[test]
    fn stabilizer_of_symmetric() {
        let s4 = GeneratedGroup::symmetric(4);
        let st = s4.point_stabilizer(0).unwrap();
        assert_eq!(st.order(), 6);
        assert!(st.generators().iter().all(|g| g.apply(0) == 0));
        let st2 = s4.point_stabilizer(3).unwrap();
        assert_eq!(st2.order(), 6);
        assert!(st2.generators().iter().all(|g| g.apply(3) == 3));
    }

    #[test]
    fn derived_subgroup_of_symmetric_is_alternating() {
        for n in 3..=7 {
            let d = GeneratedGroup::symmetric(n).derived_subgroup();
            assert_eq!(d.order(), GeneratedGroup::alternating(n).order());
        }
    }

    #[test]
    fn action_on_two_sets() {
        let s4 = GeneratedGroup::symmetric(4);
        let pairs: Vec<Vec<u32>> = vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ];
        let act = s4.action_on_sets(&pairs).unwrap();
        assert_eq!(act.degree(), 6);
        assert_eq!(act.order(), 24);
        assert!(s4.action_on_sets(&pairs[..3]).is_err());
    }

    #[test]
    fn restriction_to_invariant_subset() {
        let g = GeneratedGroup::new(
            5,
            vec![Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap()],
            "c6",
        )
        .unwrap();
        assert_eq!(g.restrict(&[3, 4]).unwrap().order(), 2);
        assert!(g.restrict(&[0, 3]).is_err());
    }
}
