//! Finite incidence structures with blocks stored as point sets.

mod affine;
mod format;
mod params;
mod structure;
mod transform;

use std::collections::HashMap;

pub use affine::{nicely_affine, NicelyAffineReport};
pub use format::{parse_design, read_design, write_design, DesignFile};
pub use params::{DesignParameters, T_MAX_CAP};
pub use structure::{structural_checks, StructuralReport};
pub use transform::{DualDesign, PointDeletion};

use crate::error::{Error, Result};
use crate::permgroup::{GeneratedGroup, Permutation};
use crate::util::BitSet;

/// Points `0..v` and a canonically sorted list of blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    v: usize,
    blocks: Vec<Vec<u32>>,
    label: String,
}

impl Design {
    /// Sorts every block and then the block list. Repeated blocks are kept.
    pub fn new(v: usize, blocks: Vec<Vec<u32>>, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        let mut blocks = blocks;
        for (i, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidDesign(format!("{label}: block {i} is empty")));
            }
            block.sort_unstable();
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDesign(format!(
                    "{label}: block {i} repeats a point"
                )));
            }
            if let Some(&p) = block.iter().find(|&&p| p as usize >= v) {
                return Err(Error::PointOutOfRange {
                    point: p as usize,
                    degree: v,
                });
            }
        }
        if blocks.is_empty() {
            return Err(Error::InvalidDesign(format!("{label}: no blocks")));
        }
        blocks.sort_unstable();
        Ok(Design { v, blocks, label })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &[u32] {
        &self.blocks[i]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Common block size, if all blocks have one.
    pub fn block_size(&self) -> Option<usize> {
        let k = self.blocks[0].len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    pub fn block_index(&self, block: &[u32]) -> Option<usize> {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(block)).ok()
    }

    pub fn is_incident(&self, point: usize, block: usize) -> bool {
        self.blocks[block].binary_search(&(point as u32)).is_ok()
    }

    /// For each point, the set of blocks containing it.
    pub fn point_rows(&self) -> Vec<BitSet> {
        let mut rows = vec![BitSet::new(self.b()); self.v];
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                rows[p as usize].insert(j);
            }
        }
        rows
    }

    /// For each block, its points as a bit set.
    pub fn block_rows(&self) -> Vec<BitSet> {
        self.blocks
            .iter()
            .map(|block| {
                let mut row = BitSet::new(self.v);
                for &p in block {
                    row.insert(p as usize);
                }
                row
            })
            .collect()
    }

    /// Permutation induced on blocks by `g`, or `None` if some image is not a block.
    fn block_image(&self, g: &Permutation, lookup: &HashMap<&[u32], usize>) -> Option<Vec<u32>> {
        self.blocks
            .iter()
            .map(|block| lookup.get(g.image_of_set(block).as_slice()).map(|&j| j as u32))
            .collect()
    }

    fn check_group(&self, group: &GeneratedGroup) -> Result<()> {
        if group.degree() != self.v {
            return Err(Error::DegreeMismatch {
                expected: self.v,
                found: group.degree(),
            });
        }
        if self.blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidDesign(format!(
                "{}: repeated blocks have no induced action",
                self.label
            )));
        }
        Ok(())
    }

    fn induced_block_permutations(&self, group: &GeneratedGroup) -> Result<Vec<Permutation>> {
        self.check_group(group)?;
        let lookup: HashMap<&[u32], usize> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| (b.as_slice(), i))
            .collect();
        group
            .generators()
            .iter()
            .enumerate()
            .map(|(gi, g)| match self.block_image(g, &lookup) {
                Some(images) => Ok(Permutation::from_images_unchecked(images)),
                None => {
                    let block = self
                        .blocks
                        .iter()
                        .position(|b| !lookup.contains_key(g.image_of_set(b).as_slice()))
                        .unwrap_or(0);
                    Err(Error::DesignNotPreserved {
                        group: group.label().to_string(),
                        design: self.label.clone(),
                        generator: gi,
                        block,
                    })
                }
            })
            .collect()
    }

    /// Action of `group` on the block list.
    pub fn block_action(&self, group: &GeneratedGroup) -> Result<GeneratedGroup> {
        let gens = self.induced_block_permutations(group)?;
        GeneratedGroup::new(self.b(), gens, format!("{} on blocks", group.label()))
    }

    /// Action on points and blocks together: points `0..v`, block `j` as `v + j`.
    pub fn combined_action(&self, group: &GeneratedGroup) -> Result<GeneratedGroup> {
        let on_blocks = self.induced_block_permutations(group)?;
        let v = self.v as u32;
        let gens = group
            .generators()
            .iter()
            .zip(on_blocks)
            .map(|(g, h)| {
                let images = g
                    .images()
                    .iter()
                    .copied()
                    .chain(h.images().iter().map(|&j| j + v))
                    .collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        GeneratedGroup::new(self.v + self.b(), gens, group.label())
    }

    /// `true` when every generator maps blocks to blocks.
    pub fn is_preserved_by(&self, group: &GeneratedGroup) -> bool {
        self.induced_block_permutations(group).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fano() -> Design {
        let lines = (0..7u32).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        Design::new(7, lines, "fano").unwrap()
    }

    #[test]
    fn blocks_are_canonical() {
        let d = Design::new(4, vec![vec![3, 1], vec![0, 2]], "x").unwrap();
        assert_eq!(d.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(d.block_index(&[1, 3]), Some(1));
        assert!(d.is_incident(3, 1));
        assert!(!d.is_incident(3, 0));
    }

    #[test]
    fn malformed_blocks_are_rejected() {
        assert!(Design::new(3, vec![vec![]], "x").is_err());
        assert!(Design::new(3, vec![vec![0, 0]], "x").is_err());
        assert!(Design::new(3, vec![vec![0, 3]], "x").is_err());
        assert!(Design::new(3, vec![], "x").is_err());
    }

    #[test]
    fn cyclic_shift_preserves_fano() {
        let d = fano();
        let shift = Permutation::from_images((0..7).map(|i| (i + 1) % 7).collect()).unwrap();
        let g = GeneratedGroup::new(7, vec![shift], "C7").unwrap();
        let on_blocks = d.block_action(&g).unwrap();
        assert!(on_blocks.is_transitive());
        let both = d.combined_action(&g).unwrap();
        assert_eq!(both.degree(), 14);
        assert_eq!(both.orbits().len(), 2);
    }

    #[test]
    fn transposition_breaks_fano() {
        let d = fano();
        let t = Permutation::from_cycles(7, &[&[0, 1]]).unwrap();
        let g = GeneratedGroup::new(7, vec![t], "t").unwrap();
        assert!(matches!(
            d.block_action(&g),
            Err(Error::DesignNotPreserved { generator: 0, .. })
        ));
    }
}
