//! Matrix groups as permutation groups, with or without the Frobenius automorphism.

use std::sync::Arc;

use super::field::FiniteField;
use super::geometry::{AffineSpace, ProjectiveSpace};
use super::matrix::FqMatrix;
use crate::error::Result;
use crate::permgroup::{GeneratedGroup, Permutation};

/// The point set a matrix group acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearDomain {
    /// All `q^d` vectors, indexed as in [`super::geometry::vector_index`].
    Vectors,
    /// The points of PG(d-1, q).
    ProjectivePoints,
}

fn permutations(
    matrices: &[FqMatrix],
    field: &Arc<FiniteField>,
    dim: usize,
    domain: LinearDomain,
    frobenius: bool,
) -> Result<Vec<Permutation>> {
    match domain {
        LinearDomain::Vectors => {
            let ag = AffineSpace::new(field.clone(), dim);
            let mut out = matrices
                .iter()
                .map(|a| ag.matrix_permutation(a))
                .collect::<Result<Vec<_>>>()?;
            if frobenius {
                out.push(ag.frobenius_permutation());
            }
            Ok(out)
        }
        LinearDomain::ProjectivePoints => {
            let pg = ProjectiveSpace::new(field.clone(), dim)?;
            let mut out = matrices
                .iter()
                .map(|a| pg.matrix_permutation(a))
                .collect::<Result<Vec<_>>>()?;
            if frobenius {
                out.push(pg.frobenius_permutation());
            }
            Ok(out)
        }
    }
}

/// Permutation image of a matrix group.
pub fn linear_action(
    matrices: &[FqMatrix],
    field: &Arc<FiniteField>,
    dim: usize,
    domain: LinearDomain,
    label: impl Into<String>,
) -> Result<GeneratedGroup> {
    let perms = permutations(matrices, field, dim, domain, false)?;
    let degree = domain_size(field, dim, domain);
    GeneratedGroup::new(degree, perms, label)
}

/// Permutation image of `⟨matrices, x ↦ x^p⟩`.
pub fn semilinear_closure(
    matrices: &[FqMatrix],
    field: &Arc<FiniteField>,
    dim: usize,
    domain: LinearDomain,
    label: impl Into<String>,
) -> Result<GeneratedGroup> {
    let perms = permutations(matrices, field, dim, domain, true)?;
    let degree = domain_size(field, dim, domain);
    GeneratedGroup::new(degree, perms, label)
}

fn domain_size(field: &FiniteField, dim: usize, domain: LinearDomain) -> usize {
    let q = field.order() as usize;
    match domain {
        LinearDomain::Vectors => q.pow(dim as u32),
        LinearDomain::ProjectivePoints => (q.pow(dim as u32) - 1) / (q - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::geometry::sl_generators;

    #[test]
    fn gamma_l_1_16() {
        let f = Arc::new(FiniteField::new(2, 4).unwrap());
        let tau = FqMatrix::diagonal(&[f.primitive_element()]);
        let g = semilinear_closure(&[tau], &f, 1, LinearDomain::Vectors, "ΓL(1,16)").unwrap();
        assert_eq!(g.degree(), 16);
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn psigmal_3_4_doubles_psl() {
        let f = Arc::new(FiniteField::new(2, 2).unwrap());
        let gens = sl_generators(&f, 3);
        let psl = linear_action(&gens, &f, 3, LinearDomain::ProjectivePoints, "PSL(3,4)").unwrap();
        let psigl = semilinear_closure(&gens, &f, 3, LinearDomain::ProjectivePoints, "PΣL(3,4)").unwrap();
        assert_eq!(psl.order(), 20160);
        assert_eq!(psigl.order(), 2 * psl.order());
    }

    #[test]
    fn prime_field_closure_is_identical() {
        let f = Arc::new(FiniteField::new(3, 1).unwrap());
        let gens = sl_generators(&f, 3);
        let a = linear_action(&gens, &f, 3, LinearDomain::ProjectivePoints, "a").unwrap();
        let b = semilinear_closure(&gens, &f, 3, LinearDomain::ProjectivePoints, "b").unwrap();
        assert_eq!(a.order(), b.order());
        assert_eq!(a.order(), 5616);
    }
}
