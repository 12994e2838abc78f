//! Designs from the Golay codes: the Hadamard designs on 12 and 11 points, the Witt
//! design on 22 points and the Higman design on 176 points.

use super::sporadic::{load_sporadic, Sporadic};
use super::Construction;
use crate::algebra::{golay_code, FieldElement, GolayKind};
use crate::data::DataSource;
use crate::design::Design;
use crate::error::Result;
use crate::permgroup::{parse_group, GeneratedGroup};

/// The two coordinates fixed by the Witt and Higman constructions.
pub const FIXED_SYMBOLS: (u32, u32) = (22, 23);

/// H(12) with M11 on the 12 coordinates of the ternary code.
pub fn h12(data: &DataSource) -> Result<Construction> {
    let code = golay_code(GolayKind::Ternary, data)?;
    let ones = vec![FieldElement::ONE; 12];
    let minus: Vec<FieldElement> = ones.iter().map(|&x| code.field().neg(x)).collect();
    let blocks: Vec<Vec<u32>> = code
        .words_of_weight(12)
        .filter(|w| **w != ones && **w != minus)
        .map(|w| {
            w.iter()
                .enumerate()
                .filter(|(_, &x)| x == FieldElement::ONE)
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect();
    let design = Design::new(12, blocks, "H(12)")?;
    let group = load_sporadic(Sporadic::M11Degree12, data)?.group;
    Ok(Construction::new(design, group))
}

/// H(11), the derived design of H(12) at point 11, with PSL(2,11) as the stabilizer.
pub fn h11(data: &DataSource) -> Result<Construction> {
    let big = h12(data)?;
    let design = big.design.derived(11)?.design.with_label("H(11)");
    let points: Vec<usize> = (0..11).collect();
    let group = big
        .group
        .point_stabilizer(11)?
        .restrict(&points)?
        .with_label("PSL(2,11)");
    Ok(Construction::new(design, group))
}

fn octads(data: &DataSource) -> Result<Vec<Vec<u32>>> {
    Ok(golay_code(GolayKind::Binary, data)?.supports_of_weight(8))
}

fn m24(data: &DataSource) -> Result<GeneratedGroup> {
    Ok(load_sporadic(Sporadic::M24, data)?.group)
}

/// The 77 hexads: octads through both fixed symbols, with M22 as their stabilizer.
pub fn m22_design(data: &DataSource) -> Result<Construction> {
    let (a, b) = FIXED_SYMBOLS;
    let blocks: Vec<Vec<u32>> = octads(data)?
        .into_iter()
        .filter(|o| o.contains(&a) && o.contains(&b))
        .map(|o| o.into_iter().filter(|&x| x != a && x != b).collect())
        .collect();
    let design = Design::new(22, blocks, "M22 hexads")?;
    let points: Vec<usize> = (0..22).collect();
    let group = m24(data)?
        .pointwise_stabilizer(&[a as usize, b as usize])?
        .restrict(&points)?
        .with_label("M22");
    Ok(Construction::new(design, group))
}

/// The Higman design, with HS when its generator file is available.
#[derive(Clone, Debug)]
pub struct D176 {
    pub design: Design,
    pub group: Option<GeneratedGroup>,
}

impl D176 {
    pub fn construction(&self) -> Option<Construction> {
        self.group
            .clone()
            .map(|g| Construction::new(self.design.clone(), g))
    }
}

/// Points are the octads containing 22 but not 23, quadrics those containing 23 but
/// not 22, both in lexicographic order. A point and a quadric are incident when the
/// octads meet in 0 or 4 symbols; each block is the point set of one quadric.
pub fn d176(data: &DataSource) -> Result<D176> {
    let (a, b) = FIXED_SYMBOLS;
    let all = octads(data)?;
    let points: Vec<&Vec<u32>> = all
        .iter()
        .filter(|o| o.contains(&a) && !o.contains(&b))
        .collect();
    let quadrics: Vec<&Vec<u32>> = all
        .iter()
        .filter(|o| o.contains(&b) && !o.contains(&a))
        .collect();
    let meet = |x: &[u32], y: &[u32]| x.iter().filter(|s| y.binary_search(s).is_ok()).count();
    let blocks: Vec<Vec<u32>> = quadrics
        .iter()
        .map(|q| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| matches!(meet(p, q), 0 | 4))
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect();
    let design = Design::new(points.len(), blocks, "D176")?;
    let name = Sporadic::HigmanSims.file_name();
    let group = match data.try_read(name)? {
        Some(text) => Some(parse_group(&text, name)?.group),
        None => None,
    };
    Ok(D176 { design, group })
}

#[derive(Clone, Debug)]
pub struct GolayDesigns {
    pub h12: Construction,
    pub h11: Construction,
    pub m22: Construction,
    pub d176: D176,
}

pub fn golay_designs(data: &DataSource) -> Result<GolayDesigns> {
    Ok(GolayDesigns {
        h12: h12(data)?,
        h11: h11(data)?,
        m22: m22_design(data)?,
        d176: d176(data)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_12() {
        let c = h12(&DataSource::Embedded).unwrap();
        let p = c.design.parameters();
        assert_eq!((p.v, p.b, p.k, p.t_max), (12, 22, Some(6), 3));
        assert_eq!(p.lambdas[3 - 1], 2);
        assert_eq!(p.intersection_numbers(), vec![0, 3]);
        assert!(c.design.is_preserved_by(&c.group));
        // complementary pairs of blocks form 11 parallel classes of size 2
        let disjoint = c
            .design
            .blocks()
            .iter()
            .filter(|x| c.design.blocks().iter().any(|y| x.iter().all(|p| !y.contains(p))))
            .count();
        assert_eq!(disjoint, 22);
    }

    #[test]
    fn hadamard_11() {
        let c = h11(&DataSource::Embedded).unwrap();
        let p = c.design.parameters();
        assert_eq!((p.v, p.b, p.k, p.lambda), (11, 11, Some(5), Some(2)));
        assert_eq!(c.group.order(), 660);
        assert!(c.design.is_preserved_by(&c.group));
    }

    #[test]
    fn witt_22() {
        let c = m22_design(&DataSource::Embedded).unwrap();
        let p = c.design.parameters();
        assert_eq!((p.v, p.b, p.k, p.lambda, p.mu), (22, 77, Some(6), Some(5), Some(2)));
        assert_eq!(p.t_max, 3);
        assert_eq!(c.group.order(), 443_520);
        assert!(c.design.is_preserved_by(&c.group));
        let res = c.design.residual(0).unwrap().design.parameters();
        assert_eq!((res.v, res.b, res.k, res.lambda, res.mu), (21, 56, Some(6), Some(4), Some(2)));
    }

    #[test]
    fn higman_176() {
        let d = d176(&DataSource::Embedded).unwrap();
        let p = d.design.parameters();
        assert_eq!((p.v, p.b, p.k, p.lambda), (176, 176, Some(50), Some(14)));
        let hs = d.group.as_ref().unwrap();
        assert!(d.design.is_preserved_by(hs));
    }

    #[test]
    fn higman_without_group_data() {
        let dir = tempfile::tempdir().unwrap();
        let name = "binary_golay.code";
        std::fs::write(dir.path().join(name), DataSource::Embedded.read(name).unwrap()).unwrap();
        let d = d176(&DataSource::Dir(dir.path().to_path_buf())).unwrap();
        assert!(d.group.is_none());
        assert_eq!(d.design.parameters().lambda, Some(14));
    }
}
