//! Designs on a vector space `V` whose blocks are all cosets of an orbit of subspaces.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::sporadic::load_matrix_group;
use super::Construction;
use crate::algebra::geometry::sl_generators;
use crate::algebra::{linear_action, subspaces, AffineSpace, FieldElement, FiniteField, FqMatrix, LinearDomain, Subspace};
use crate::data::DataSource;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::{transitivity_degree, GeneratedGroup};

/// `G_0 ≤ GL(d, p)` by matrix generators (row-vector action) and an orbit `M` of
/// subspaces of `V = GF(p)^d`.
#[derive(Clone, Debug)]
pub struct ConstructionInput {
    pub field: Arc<FiniteField>,
    pub dim: usize,
    pub generators: Vec<FqMatrix>,
    pub subspaces: Vec<Subspace>,
    pub label: String,
}

impl ConstructionInput {
    pub fn new(p: u32, dim: usize, generators: Vec<FqMatrix>, subspaces: Vec<Subspace>, label: impl Into<String>) -> Result<Self> {
        let field = Arc::new(FiniteField::new(p, 1)?);
        Ok(ConstructionInput {
            field,
            dim,
            generators,
            subspaces,
            label: label.into(),
        })
    }

    /// The `G_0`-orbit of `seed`.
    pub fn orbit_of(p: u32, dim: usize, generators: Vec<FqMatrix>, seed: Subspace, label: impl Into<String>) -> Result<Self> {
        let field = Arc::new(FiniteField::new(p, 1)?);
        let mut seen = BTreeSet::new();
        let mut queue = vec![seed];
        while let Some(s) = queue.pop() {
            if seen.contains(&s) {
                continue;
            }
            for g in &generators {
                queue.push(s.image(&field, g)?);
            }
            seen.insert(s);
        }
        Ok(ConstructionInput {
            field,
            dim,
            generators,
            subspaces: seen.into_iter().collect(),
            label: label.into(),
        })
    }
}

fn fail(condition: char, detail: impl Into<String>) -> Error {
    Error::ConstructionCondition {
        condition,
        detail: detail.into(),
    }
}

/// Checks conditions (a)–(d) and returns the design with `N.G_0`, `N` the translations.
///
/// (a) `G_0` is transitive on `V \ {0}`; (b) `M` is a `G_0`-orbit of size `r ≥ 3` on
/// which `G_0` is 2-transitive; (c) `V = M_1 + M_2`; (d) the stabilizer of `M_1` is
/// transitive on the non-zero elements of `V/M_1`.
pub fn construction_regn(input: &ConstructionInput) -> Result<Construction> {
    let field = &input.field;
    let d = input.dim;
    let ag = AffineSpace::new(field.clone(), d);
    let n = ag.num_points();
    let g0 = linear_action(&input.generators, field, d, LinearDomain::Vectors, input.label.clone())?;

    let nonzero = g0.orbit(1)?.len();
    if nonzero != n - 1 {
        return Err(fail('a', format!("orbit of a non-zero vector has length {nonzero}, not {}", n - 1)));
    }

    let r = input.subspaces.len();
    if r < 3 {
        return Err(fail('b', format!("r = {r} < 3")));
    }
    let sets: Vec<Vec<u32>> = input
        .subspaces
        .iter()
        .map(|s| {
            let mut v: Vec<u32> = s.vectors(field, d).iter().map(|x| ag.index(x) as u32).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let on_m = g0
        .action_on_sets(&sets)
        .map_err(|_| fail('b', "the subspaces are not permuted by G_0"))?;
    if !on_m.is_transitive() {
        return Err(fail('b', "G_0 is not transitive on the subspaces"));
    }
    if transitivity_degree(&on_m, 2) < 2 {
        return Err(fail('b', "G_0 is not 2-transitive on the subspaces"));
    }

    let mut spanning: Vec<Vec<FieldElement>> = input.subspaces[0].basis().to_vec();
    spanning.extend_from_slice(input.subspaces[1].basis());
    if Subspace::spanned_by(field, &spanning).dim() != d {
        return Err(fail('c', "M_1 + M_2 is a proper subspace"));
    }

    // stabilizer of M_1 via the action on vectors and subspaces together
    let gens = g0
        .generators()
        .iter()
        .zip(on_m.generators())
        .map(|(g, h)| {
            let mut images = g.images().to_vec();
            images.extend(h.images().iter().map(|&x| x + n as u32));
            crate::permgroup::Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let both = GeneratedGroup::new(n + r, gens, "G_0")?;
    let points: Vec<usize> = (0..n).collect();
    let stab = both.point_stabilizer(n)?.restrict(&points)?;
    let cosets = ag.cosets(&input.subspaces[0]);
    let on_cosets = stab
        .action_on_sets(&cosets)
        .map_err(|_| fail('d', "the stabilizer of M_1 does not permute its cosets"))?;
    let zero_coset = cosets.iter().position(|c| c[0] == 0).expect("one coset contains 0");
    let other = (0..cosets.len()).find(|&c| c != zero_coset);
    if let Some(c) = other {
        let len = on_cosets.orbit(c)?.len();
        if len != cosets.len() - 1 {
            return Err(fail('d', format!("orbit on non-zero cosets of M_1 has length {len}, not {}", cosets.len() - 1)));
        }
    }

    let blocks: Vec<Vec<u32>> = input.subspaces.iter().flat_map(|s| ag.cosets(s)).collect();
    let q = field.order();
    let design = Design::new(n, blocks, format!("{} cosets in GF({q})^{d}", input.label))?;
    let translations = ag.translation_generators();
    let n_group = GeneratedGroup::new(n, translations.clone(), format!("{q}^{d}"))?;
    let group = g0.extended(&translations, format!("{q}^{d}:{}", input.label))?;
    Ok(Construction::new(design, group).with_translations(n_group))
}

/// GL(3,2) with its seven hyperplanes.
pub fn regn_gl32_input() -> Result<ConstructionInput> {
    let field = FiniteField::new(2, 1)?;
    let gens = sl_generators(&field, 3);
    let hyperplanes = subspaces(&field, 3, 2);
    ConstructionInput::new(2, 3, gens, hyperplanes, "GL(3,2)")
}

/// Alt(7) ≤ GL(4,2) from the bundled matrices, with all fifteen hyperplanes.
pub fn regn_alt7_input(data: &DataSource) -> Result<ConstructionInput> {
    let file = load_matrix_group("alt7_gl42.mat", data)?;
    let hyperplanes = subspaces(&file.field, 4, 3);
    ConstructionInput::new(2, 4, file.matrices, hyperplanes, "Alt(7)")
}

/// ΓL(1,16) written over GF(2), with the orbit of the subfield GF(4).
pub fn regn_gammal116_input() -> Result<ConstructionInput> {
    let big = FiniteField::new(2, 4)?;
    let basis: Vec<FieldElement> = (0..4)
        .map(|i| {
            let mut digits = vec![0u32; 4];
            digits[i] = 1;
            big.from_digits(&digits)
        })
        .collect();
    let as_row = |x: FieldElement| -> Vec<FieldElement> { big.digits(x).into_iter().map(FieldElement).collect() };
    let eps = big.primitive_element();
    let tau = FqMatrix::from_rows(basis.iter().map(|&b| as_row(big.mul(eps, b))).collect())?;
    let sigma = FqMatrix::from_rows(basis.iter().map(|&b| as_row(big.frobenius(b, 1))).collect())?;
    let small = FiniteField::new(2, 1)?;
    let gf4 = Subspace::spanned_by(&small, &[as_row(FieldElement::ONE), as_row(big.exp(5))]);
    ConstructionInput::orbit_of(2, 4, vec![tau, sigma], gf4, "ΓL(1,16)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ag_design, GroupLevel};
    use crate::design::nicely_affine;

    #[test]
    fn gl32_hyperplanes_give_ag32() {
        let c = construction_regn(&regn_gl32_input().unwrap()).unwrap();
        let ag = ag_design(3, 2, GroupLevel::Special).unwrap();
        assert_eq!(c.design.blocks(), ag.design.blocks());
        assert_eq!(c.group.order(), 1344);
        assert!(nicely_affine(&c.design, c.translations.as_ref().unwrap()).unwrap().holds);
    }

    #[test]
    fn alt7_hyperplanes() {
        let c = construction_regn(&regn_alt7_input(&DataSource::Embedded).unwrap()).unwrap();
        let p = c.design.parameters();
        assert_eq!((p.v, p.b, p.k, p.lambda, p.mu), (16, 30, Some(8), Some(7), Some(4)));
        assert_eq!(c.group.order(), 16 * 2520);
    }

    #[test]
    fn gammal1_16_subfield_lines() {
        let input = regn_gammal116_input().unwrap();
        assert_eq!(input.subspaces.len(), 5);
        let c = construction_regn(&input).unwrap();
        let p = c.design.parameters();
        assert_eq!((p.v, p.b, p.k, p.lambda, p.mu), (16, 20, Some(4), Some(1), Some(1)));
        assert_eq!(c.group.order(), 16 * 60);
        assert!(nicely_affine(&c.design, c.translations.as_ref().unwrap()).unwrap().holds);
    }

    #[test]
    fn failing_conditions_are_named() {
        let field = FiniteField::new(2, 1).unwrap();
        let identity = FqMatrix::identity(3);
        let input = ConstructionInput::new(2, 3, vec![identity], subspaces(&field, 3, 2), "1").unwrap();
        assert!(matches!(
            construction_regn(&input),
            Err(Error::ConstructionCondition { condition: 'a', .. })
        ));
        let mut two = regn_gl32_input().unwrap();
        two.subspaces.truncate(2);
        assert!(matches!(
            construction_regn(&two),
            Err(Error::ConstructionCondition { condition: 'b', .. })
        ));
        // lines of GF(2)^3 through 0: any two span only a plane
        let lines = ConstructionInput::new(2, 3, sl_generators(&field, 3), subspaces(&field, 3, 1), "GL(3,2)").unwrap();
        assert!(matches!(
            construction_regn(&lines),
            Err(Error::ConstructionCondition { condition: 'c', .. })
        ));
    }
}
