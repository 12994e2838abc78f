use super::Design;
use crate::error::{Error, Result};

/// The dual design together with the original point behind each dual block.
#[derive(Clone, Debug)]
pub struct DualDesign {
    pub design: Design,
    /// `point_of_block[j]` is the original point whose block row became dual block `j`.
    pub point_of_block: Vec<usize>,
}

/// A design on `v - 1` points obtained by deleting one point.
#[derive(Clone, Debug)]
pub struct PointDeletion {
    pub design: Design,
    pub deleted: usize,
}

impl PointDeletion {
    /// Original label of new point `x`.
    pub fn original_point(&self, x: usize) -> usize {
        if x < self.deleted {
            x
        } else {
            x + 1
        }
    }
}

fn relabel_without(block: &[u32], p: u32) -> Vec<u32> {
    block
        .iter()
        .filter(|&&x| x != p)
        .map(|&x| if x > p { x - 1 } else { x })
        .collect()
}

impl Design {
    /// Every block replaced by its complement in the point set.
    pub fn complement(&self) -> Result<Design> {
        let v = self.v as u32;
        let blocks = self
            .blocks
            .iter()
            .map(|b| (0..v).filter(|x| b.binary_search(x).is_err()).collect())
            .collect();
        Design::new(self.v, blocks, format!("{}^c", self.label))
    }

    /// Points and blocks exchanged.
    pub fn dual(&self) -> Result<DualDesign> {
        let mut rows: Vec<(Vec<u32>, usize)> = vec![(Vec::new(), 0); self.v];
        for (p, row) in rows.iter_mut().enumerate() {
            row.1 = p;
        }
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                rows[p as usize].0.push(j as u32);
            }
        }
        if let Some((_, p)) = rows.iter().find(|(r, _)| r.is_empty()) {
            return Err(Error::InvalidDesign(format!(
                "{}: point {p} lies on no block",
                self.label
            )));
        }
        rows.sort();
        let point_of_block = rows.iter().map(|(_, p)| *p).collect();
        let blocks = rows.into_iter().map(|(r, _)| r).collect();
        Ok(DualDesign {
            design: Design::new(self.b(), blocks, format!("{}^*", self.label))?,
            point_of_block,
        })
    }

    /// Blocks through `point`, with `point` removed.
    pub fn derived(&self, point: usize) -> Result<PointDeletion> {
        self.check_point(point)?;
        let p = point as u32;
        let blocks: Vec<Vec<u32>> = self
            .blocks
            .iter()
            .filter(|b| b.binary_search(&p).is_ok())
            .map(|b| relabel_without(b, p))
            .collect();
        if blocks.is_empty() {
            return Err(Error::InvalidDesign(format!(
                "{}: no block contains point {point}",
                self.label
            )));
        }
        Ok(PointDeletion {
            design: Design::new(self.v - 1, blocks, format!("{}_{point}", self.label))?,
            deleted: point,
        })
    }

    /// Blocks avoiding `point`, on the remaining points.
    pub fn residual(&self, point: usize) -> Result<PointDeletion> {
        self.check_point(point)?;
        let p = point as u32;
        let blocks: Vec<Vec<u32>> = self
            .blocks
            .iter()
            .filter(|b| b.binary_search(&p).is_err())
            .map(|b| relabel_without(b, p))
            .collect();
        if blocks.is_empty() {
            return Err(Error::InvalidDesign(format!(
                "{}: every block contains point {point}",
                self.label
            )));
        }
        Ok(PointDeletion {
            design: Design::new(self.v - 1, blocks, format!("{}^{point}", self.label))?,
            deleted: point,
        })
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.v {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.v,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::tests::fano;
    use proptest::prelude::*;

    fn random_design() -> impl Strategy<Value = Design> {
        (3usize..9).prop_flat_map(|v| {
            proptest::collection::vec(proptest::collection::btree_set(0..v as u32, 1..v), 1..10)
                .prop_map(move |sets| {
                    let mut blocks: Vec<Vec<u32>> =
                        sets.into_iter().map(|s| s.into_iter().collect()).collect();
                    for p in 0..v as u32 {
                        if !blocks.iter().any(|b| b.contains(&p)) {
                            blocks.push(vec![p]);
                        }
                    }
                    Design::new(v, blocks, "random").unwrap()
                })
        })
    }

    #[test]
    fn fano_complement_and_dual() {
        let d = fano();
        let c = d.complement().unwrap();
        let p = c.parameters();
        assert_eq!((p.k, p.lambda), (Some(4), Some(2)));
        let dual = d.dual().unwrap();
        assert_eq!(dual.design.parameters().lambda, Some(1));
    }

    #[test]
    fn derived_and_residual_of_fano() {
        let d = fano();
        let der = d.derived(0).unwrap();
        assert_eq!(der.design.b(), 3);
        assert_eq!(der.design.block_size(), Some(2));
        let res = d.residual(0).unwrap();
        assert_eq!(res.design.b(), 4);
        assert_eq!(res.design.v(), 6);
        assert_eq!(res.original_point(0), 1);
        assert!(d.derived(7).is_err());
    }

    #[test]
    fn derived_needs_an_incident_block() {
        let d = Design::new(3, vec![vec![0, 1]], "x").unwrap();
        assert!(d.derived(2).is_err());
        assert!(d.residual(0).is_err());
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(d in random_design()) {
            let back = d.complement().unwrap().complement().unwrap();
            prop_assert_eq!(back.blocks(), d.blocks());
        }

        #[test]
        fn double_dual_is_a_relabelling(d in random_design()) {
            let once = d.dual().unwrap();
            let twice = once.design.dual().unwrap();
            // dual point j of the second dual is dual block j of the first, i.e. original point
            let relabel = |x: u32| once.point_of_block[x as usize] as u32;
            let mut mapped: Vec<Vec<u32>> = twice
                .design
                .blocks()
                .iter()
                .map(|b| {
                    let mut m: Vec<u32> = b.iter().map(|&x| relabel(x)).collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            mapped.sort();
            prop_assert_eq!(mapped, d.blocks().to_vec());
        }
    }
}
