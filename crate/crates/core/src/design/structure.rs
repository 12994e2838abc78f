use std::collections::HashSet;

use super::Design;
use crate::util::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    /// The point–block incidence graph is connected.
    pub connected: bool,
    pub repeated_blocks: bool,
    /// Two points lie on exactly the same blocks.
    pub repeated_points: bool,
    /// Fails `2 < k < v`.
    pub trivial: bool,
}

pub fn structural_checks(design: &Design) -> StructuralReport {
    let v = design.v();
    let mut uf = UnionFind::new(v + design.b());
    for (j, block) in design.blocks().iter().enumerate() {
        for &p in block {
            uf.union(p as usize, v + j);
        }
    }
    let connected = uf.classes().len() == 1;
    let repeated_blocks = design.blocks().windows(2).any(|w| w[0] == w[1]);
    let mut rows = HashSet::new();
    let repeated_points = !design.point_rows().into_iter().all(|row| rows.insert(row));
    let trivial = !matches!(design.block_size(), Some(k) if 2 < k && k < v);
    StructuralReport {
        connected,
        repeated_blocks,
        repeated_points,
        trivial,
    }
}
