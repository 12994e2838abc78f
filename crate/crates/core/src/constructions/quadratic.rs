//! Symmetric designs on GF(2)^{2m} whose blocks come from quadratic forms.

use std::fmt;

use super::Construction;
use crate::algebra::{subfield_symplectic_group, symplectic_group, FormType, QuadraticForm, SymplecticGroup};
use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::{GeneratedGroup, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormsSign {
    /// Block size `2^{2m-1} - 2^{m-1}`.
    Minus,
    /// The complement, block size `2^{2m-1} + 2^{m-1}`.
    Plus,
}

/// The point stabilizer `G_0 ≤ Sp(2m, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpVariant {
    Full,
    /// The commutator subgroup.
    Derived,
    /// `Sp(2m/e, 2^e)` embedded via the trace form.
    Subfield(usize),
}

impl fmt::Display for SpVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpVariant::Full => f.write_str("full"),
            SpVariant::Derived => f.write_str("derived"),
            SpVariant::Subfield(e) => write!(f, "subfield {e}"),
        }
    }
}

fn stabilizer(m: usize, variant: SpVariant) -> Result<SymplecticGroup> {
    match variant {
        SpVariant::Full => symplectic_group(m),
        SpVariant::Derived => symplectic_group(m)?.derived(),
        SpVariant::Subfield(e) => subfield_symplectic_group(m, e),
    }
}

/// The vectors incident with `Q`: its zeros when elliptic, otherwise its non-zeros.
fn incident_vectors(q: &QuadraticForm) -> Vec<u32> {
    let want_zero = q.kind() == FormType::Elliptic;
    (0..1u32 << (2 * q.half_dim()))
        .filter(|&x| q.eval(x) != want_zero)
        .collect()
}

fn translations(m: usize) -> Vec<Permutation> {
    let n = 1u32 << (2 * m);
    (0..2 * m)
        .map(|i| Permutation::from_images((0..n).map(|x| x ^ (1 << i)).collect()).expect("xor is a bijection"))
        .collect()
}

/// `S^-(2m)` or `S^+(2m)` with `2^{2m}:G_0`, points the vectors and one block per form.
pub fn quadratic_forms_design(m: usize, sign: FormsSign, variant: SpVariant) -> Result<Construction> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("forms design needs m >= 2, got {m}")));
    }
    let n = 1usize << (2 * m);
    let blocks = (0..n as u32)
        .map(|a| QuadraticForm::shifted(m, a).map(|q| incident_vectors(&q)))
        .collect::<Result<Vec<_>>>()?;
    let expected = (1usize << (2 * m - 1)) - (1usize << (m - 1));
    if let Some(bad) = blocks.iter().find(|b| b.len() != expected) {
        return Err(Error::InvalidDesign(format!(
            "form block of size {}, expected {expected}",
            bad.len()
        )));
    }
    let minus = Design::new(n, blocks, format!("S-({})", 2 * m))?;
    let design = match sign {
        FormsSign::Minus => minus,
        FormsSign::Plus => minus.complement()?.with_label(format!("S+({})", 2 * m)),
    };
    let g0 = stabilizer(m, variant)?;
    let t = translations(m);
    let n_group = GeneratedGroup::new(n, t.clone(), format!("2^{}", 2 * m))?;
    let label = format!("2^{}:{}", 2 * m, g0.on_vectors.label());
    let group = g0.on_vectors.extended(&t, label)?;
    Ok(Construction::new(design, group).with_translations(n_group))
}

/// The structure with the forms of one type as points and the non-zero vectors as
/// blocks, incidence taken from the smaller orbit of a form's stabilizer on vectors.
#[derive(Clone, Debug)]
pub struct Sp62Fixture {
    pub construction: Construction,
    pub kind: FormType,
}

pub fn sp62_negative_fixture(kind: FormType) -> Result<Sp62Fixture> {
    let m = 3;
    let sp = symplectic_group(m)?;
    let forms: Vec<(u32, QuadraticForm)> = (0..1u32 << (2 * m))
        .map(|a| Ok((a, QuadraticForm::shifted(m, a)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, q)| q.kind() == kind)
        .collect();
    let blocks: Vec<Vec<u32>> = (1..1u32 << (2 * m))
        .map(|x| {
            forms
                .iter()
                .enumerate()
                .filter(|(_, (_, q))| incident_vectors(q).binary_search(&x).is_ok())
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect();
    let design = Design::new(forms.len(), blocks, format!("Sp(6,2) {} forms/vectors", forms.len()))?;
    let indices: Vec<usize> = forms.iter().map(|(a, _)| *a as usize).collect();
    let group = sp.on_forms.restrict(&indices)?.with_label("Sp(6,2)");
    Ok(Sp62Fixture {
        construction: Construction::new(design, group),
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vkl(c: &Construction) -> (usize, usize, Option<usize>, Option<usize>) {
        let p = c.design.parameters();
        (p.v, p.b, p.k, p.lambda)
    }

    #[test]
    fn small_forms_designs() {
        let c = quadratic_forms_design(2, FormsSign::Minus, SpVariant::Full).unwrap();
        assert_eq!(vkl(&c), (16, 16, Some(6), Some(2)));
        assert_eq!(c.group.order(), 16 * 720);
        assert!(c.design.is_preserved_by(&c.group));
        let c = quadratic_forms_design(2, FormsSign::Plus, SpVariant::Derived).unwrap();
        assert_eq!(vkl(&c), (16, 16, Some(10), Some(6)));
        assert_eq!(c.group.order(), 16 * 360);
        assert!(c.design.is_preserved_by(&c.group));
        let c = quadratic_forms_design(2, FormsSign::Minus, SpVariant::Subfield(2)).unwrap();
        assert_eq!(c.group.order(), 16 * 60);
        assert!(c.design.is_preserved_by(&c.group));
    }

    #[test]
    fn forms_design_m3_matches_formulas() {
        let c = quadratic_forms_design(3, FormsSign::Minus, SpVariant::Full).unwrap();
        let (m, v) = (3u32, 64usize);
        assert_eq!(
            vkl(&c),
            (v, v, Some((1 << (2 * m - 1)) - (1 << (m - 1))), Some((1 << (2 * m - 2)) - (1 << (m - 1))))
        );
        assert!(c.design.is_preserved_by(&c.group));
    }

    #[test]
    fn sp62_fixtures_have_no_disjoint_blocks() {
        for (kind, v) in [(FormType::Elliptic, 28), (FormType::Hyperbolic, 36)] {
            let f = sp62_negative_fixture(kind).unwrap();
            let d = &f.construction.design;
            assert_eq!((d.v(), d.b()), (v, 63));
            assert!(d.is_preserved_by(&f.construction.group));
            assert!(!d.parameters().intersection_numbers().contains(&0));
        }
    }
}
