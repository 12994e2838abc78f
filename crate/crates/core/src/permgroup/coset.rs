//! Action on right cosets `Hg`.

use std::collections::HashMap;

use super::chain::StabilizerChain;
use super::group::GeneratedGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_INDEX_BOUND: u128 = 100_000;

#[derive(Clone, Debug)]
pub struct CosetAction {
    /// The image group, of degree `[G : H]`.
    pub group: GeneratedGroup,
    /// Canonical coset representatives, indexed by coset number; coset 0 is `H`.
    pub representatives: Vec<Permutation>,
    /// Whether the kernel is trivial.
    pub faithful: bool,
    h_chain: StabilizerChain,
    lookup: HashMap<Vec<u32>, usize>,
}

impl CosetAction {
    /// Number of the coset `Hg`.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.lookup
            .get(canonical(&self.h_chain, g).images())
            .copied()
    }

    /// The permutation of cosets induced by an element of the group.
    pub fn image(&self, g: &Permutation) -> Result<Permutation> {
        let images = self
            .representatives
            .iter()
            .map(|r| {
                self.coset_of(&r.compose(g))
                    .map(|i| i as u32)
                    .ok_or_else(|| Error::InvalidArgument("element outside the group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

/// Lexicographically least element of `Hg` along the base of `h_chain`.
fn canonical(h_chain: &StabilizerChain, g: &Permutation) -> Permutation {
    let mut c = g.clone();
    for level in 0..h_chain.depth() {
        let best = h_chain
            .basic_orbit(level)
            .iter()
            .copied()
            .min_by_key(|&y| c.apply(y))
            .expect("basic orbits are non-empty");
        let u = h_chain
            .transversal_element(level, best)
            .expect("orbit point has a transversal");
        c = u.compose(&c);
    }
    c
}

pub fn coset_action(group: &GeneratedGroup, subgroup: &GeneratedGroup) -> Result<CosetAction> {
    coset_action_bounded(group, subgroup, DEFAULT_INDEX_BOUND)
}

pub fn coset_action_bounded(
    group: &GeneratedGroup,
    subgroup: &GeneratedGroup,
    bound: u128,
) -> Result<CosetAction> {
    if !subgroup.is_subgroup_of(group) {
        return Err(Error::NotSubgroup {
            what: subgroup.label().to_string(),
            of: group.label().to_string(),
        });
    }
    let index = group.order() / subgroup.order();
    if index > bound {
        return Err(Error::IndexTooLarge { index, bound });
    }
    let h_chain = subgroup.chain().clone();
    let h_chain = &h_chain;
    let mut reps: Vec<Permutation> = vec![canonical(h_chain, &Permutation::identity(group.degree()))];
    let mut lookup: HashMap<Vec<u32>, usize> = HashMap::new();
    lookup.insert(reps[0].images().to_vec(), 0);
    let gens = group.generators();
    let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(index as usize); gens.len()];
    let mut k = 0;
    while k < reps.len() {
        for (s, g) in gens.iter().enumerate() {
            let c = canonical(h_chain, &reps[k].compose(g));
            let next = reps.len();
            let id = *lookup.entry(c.images().to_vec()).or_insert(next);
            if id == next {
                reps.push(c);
            }
            images[s].push(id as u32);
        }
        k += 1;
    }
    debug_assert_eq!(reps.len() as u128, index);
    let perms = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    let label = format!("{} on cosets of {}", group.label(), subgroup.label());
    let image = GeneratedGroup::new(reps.len(), perms, label)?;
    let faithful = image.order() == group.order();
    Ok(CosetAction {
        group: image,
        representatives: reps,
        faithful,
        h_chain: h_chain.clone(),
        lookup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::action::action_report;

    #[test]
    fn sym4_on_cosets_of_sym3() {
        let s4 = GeneratedGroup::symmetric(4);
        let s3 = s4.point_stabilizer(3).unwrap();
        let act = coset_action(&s4, &s3).unwrap();
        assert_eq!(act.group.degree(), 4);
        assert!(act.faithful);
        assert!(action_report(&act.group).unwrap().two_transitive);
    }

    #[test]
    fn klein_kernel_is_detected() {
        // Sym(4) on cosets of a Sym(3)-containing Klein overgroup: action on 3 points.
        let s4 = GeneratedGroup::symmetric(4);
        let d8 = s4
            .subgroup(
                vec![
                    Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
                    Permutation::from_cycles(4, &[&[0, 2]]).unwrap(),
                ],
                "D8",
            )
            .unwrap();
        let act = coset_action(&s4, &d8).unwrap();
        assert_eq!(act.group.degree(), 3);
        assert!(!act.faithful);
        assert_eq!(act.group.order(), 6);
    }

    #[test]
    fn rejects_non_subgroups_and_large_index() {
        let s4 = GeneratedGroup::symmetric(4);
        let other = GeneratedGroup::new(
            4,
            vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()],
            "c2",
        )
        .unwrap();
        let a4 = GeneratedGroup::alternating(4);
        assert!(coset_action(&a4, &other).is_err());
        assert!(matches!(
            coset_action_bounded(&s4, &other, 5),
            Err(Error::IndexTooLarge { index: 12, bound: 5 })
        ));
    }
}
