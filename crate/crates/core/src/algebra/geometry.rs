//! Vector, projective and affine geometry over GF(q).
//!
//! A vector `v` of GF(q)^n has index `Σ v_i q^i`. Projective points are represented by
//! the vector whose first nonzero coordinate is 1, and listed in lexicographic order of
//! coordinate tuples. Subspaces are stored by their reduced row-echelon basis.

use std::sync::Arc;

use super::field::{FieldElement, FiniteField};
use super::matrix::{span_basis, FqMatrix};
use crate::error::{Error, Result};
use crate::permgroup::Permutation;

pub fn vector_index(field: &FiniteField, v: &[FieldElement]) -> usize {
    let q = field.order() as usize;
    v.iter().rev().fold(0, |acc, x| acc * q + x.index())
}

pub fn vector_from_index(field: &FiniteField, dim: usize, mut idx: usize) -> Vec<FieldElement> {
    let q = field.order() as usize;
    (0..dim)
        .map(|_| {
            let x = idx % q;
            idx /= q;
            FieldElement(x as u32)
        })
        .collect()
}

/// Number of `k`-dimensional subspaces of GF(q)^n.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// A subspace by its canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    basis: Vec<Vec<FieldElement>>,
}

impl Subspace {
    pub fn spanned_by(field: &FiniteField, vectors: &[Vec<FieldElement>]) -> Self {
        Subspace {
            basis: span_basis(field, vectors),
        }
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All vectors of the subspace, zero included.
    pub fn vectors(&self, field: &FiniteField, ambient: usize) -> Vec<Vec<FieldElement>> {
        let q = field.order() as usize;
        let k = self.basis.len();
        let total = q.pow(k as u32);
        (0..total)
            .map(|c| {
                let coeffs = vector_from_index(field, k, c);
                let mut v = vec![FieldElement::ZERO; ambient];
                for (coef, row) in coeffs.iter().zip(&self.basis) {
                    for (x, &r) in v.iter_mut().zip(row) {
                        *x = field.add(*x, field.mul(*coef, r));
                    }
                }
                v
            })
            .collect()
    }

    pub fn image(&self, field: &FiniteField, a: &FqMatrix) -> Result<Subspace> {
        let rows = self
            .basis
            .iter()
            .map(|v| a.vec_mul(field, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::spanned_by(field, &rows))
    }
}

/// All `k`-dimensional subspaces of GF(q)^n, sorted by basis.
pub fn subspaces(field: &FiniteField, n: usize, k: usize) -> Vec<Subspace> {
    let q = field.order();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free slots: row r, column c > pivot r, c not a pivot.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let piv = pivots.clone();
                ((pivots[r] + 1)..n)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let count = (q as usize).pow(free.len() as u32);
        for fill in 0..count {
            let vals = vector_from_index(field, free.len(), fill);
            let mut basis = vec![vec![FieldElement::ZERO; n]; k];
            for (r, &p) in pivots.iter().enumerate() {
                basis[r][p] = FieldElement::ONE;
            }
            for (&(r, c), &v) in free.iter().zip(&vals) {
                basis[r][c] = v;
            }
            out.push(Subspace { basis });
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        if k == 0 {
            out.sort();
            return out;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectKind {
    Points,
    Lines,
    Hyperplanes,
}

/// Points, lines or hyperplanes of PG(d-1, q), as subspaces of GF(q)^d.
pub fn projective_objects(field: &FiniteField, d: usize, kind: ObjectKind) -> Result<Vec<Subspace>> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("projective geometry needs d >= 2, got {d}")));
    }
    let k = match kind {
        ObjectKind::Points => 1,
        ObjectKind::Lines if d < 3 => {
            return Err(Error::InvalidArgument(format!(
                "lines of PG({}, q) need d >= 3",
                d - 1
            )))
        }
        ObjectKind::Lines => 2,
        ObjectKind::Hyperplanes => d - 1,
    };
    Ok(subspaces(field, d, k))
}

/// PG(d-1, q) with its points indexed.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: Arc<FiniteField>,
    dim: usize,
    points: Vec<Vec<FieldElement>>,
    lookup: Vec<u32>,
}

impl ProjectiveSpace {
    pub fn new(field: Arc<FiniteField>, dim: usize) -> Result<Self> {
        let pts = projective_objects(&field, dim, ObjectKind::Points)?;
        let points: Vec<Vec<FieldElement>> = pts.into_iter().map(|s| s.basis[0].clone()).collect();
        let size = (field.order() as usize).pow(dim as u32);
        let mut lookup = vec![u32::MAX; size];
        for (i, p) in points.iter().enumerate() {
            lookup[vector_index(&field, p)] = i as u32;
        }
        Ok(ProjectiveSpace {
            field,
            dim,
            points,
            lookup,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, i: usize) -> &[FieldElement] {
        &self.points[i]
    }

    pub fn normalise(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let lead = *v.iter().find(|x| !x.is_zero())?;
        let inv = self.field.inv(lead).ok()?;
        Some(v.iter().map(|&x| self.field.mul(inv, x)).collect())
    }

    pub fn point_index(&self, v: &[FieldElement]) -> Option<usize> {
        let n = self.normalise(v)?;
        let i = self.lookup[vector_index(&self.field, &n)];
        (i != u32::MAX).then_some(i as usize)
    }

    /// Point sets of the given subspaces, each sorted.
    pub fn point_sets(&self, objects: &[Subspace]) -> Vec<Vec<u32>> {
        objects
            .iter()
            .map(|s| {
                let mut set: Vec<u32> = s
                    .vectors(&self.field, self.dim)
                    .iter()
                    .filter_map(|v| self.point_index(v).map(|i| i as u32))
                    .collect();
                set.sort_unstable();
                set.dedup();
                set
            })
            .collect()
    }

    pub fn matrix_permutation(&self, a: &FqMatrix) -> Result<Permutation> {
        let images = self
            .points
            .iter()
            .map(|p| {
                let img = a.vec_mul(&self.field, p)?;
                self.point_index(&img)
                    .map(|i| i as u32)
                    .ok_or_else(|| Error::InvalidArgument("singular matrix".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// Coordinatewise `x ↦ x^p`.
    pub fn frobenius_permutation(&self) -> Permutation {
        let images = self
            .points
            .iter()
            .map(|p| {
                let img: Vec<FieldElement> = p.iter().map(|&x| self.field.frobenius(x, 1)).collect();
                self.point_index(&img).expect("frobenius preserves points") as u32
            })
            .collect();
        Permutation::from_images(images).expect("frobenius is a bijection")
    }
}

/// AG(n, q): points are vector indices `0..q^n`.
#[derive(Clone, Debug)]
pub struct AffineSpace {
    field: Arc<FiniteField>,
    dim: usize,
}

/// Affine hyperplanes grouped by parallel class.
#[derive(Clone, Debug)]
pub struct ParallelClasses {
    /// `classes[c]` lists the cosets of the `c`-th linear hyperplane, each sorted.
    pub classes: Vec<Vec<Vec<u32>>>,
}

impl ParallelClasses {
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        self.classes.iter().flatten().cloned().collect()
    }
}

impl AffineSpace {
    pub fn new(field: Arc<FiniteField>, dim: usize) -> Self {
        AffineSpace { field, dim }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_points(&self) -> usize {
        (self.field.order() as usize).pow(self.dim as u32)
    }

    pub fn vector(&self, idx: usize) -> Vec<FieldElement> {
        vector_from_index(&self.field, self.dim, idx)
    }

    pub fn index(&self, v: &[FieldElement]) -> usize {
        vector_index(&self.field, v)
    }

    fn add(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    /// Cosets `W + t` of a linear subspace, each sorted, ordered by least element.
    pub fn cosets(&self, w: &Subspace) -> Vec<Vec<u32>> {
        let members: Vec<Vec<FieldElement>> = w.vectors(&self.field, self.dim);
        let n = self.num_points();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for t in 0..n {
            if seen[t] {
                continue;
            }
            let tv = self.vector(t);
            let mut coset: Vec<u32> = members
                .iter()
                .map(|m| self.index(&self.add(m, &tv)) as u32)
                .collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x as usize] = true;
            }
            out.push(coset);
        }
        out
    }

    pub fn hyperplane_cosets(&self) -> Result<ParallelClasses> {
        if self.dim < 2 {
            return Err(Error::InvalidArgument("affine hyperplanes need f >= 2".into()));
        }
        let hyperplanes = subspaces(&self.field, self.dim, self.dim - 1);
        Ok(ParallelClasses {
            classes: hyperplanes.iter().map(|h| self.cosets(h)).collect(),
        })
    }

    pub fn matrix_permutation(&self, a: &FqMatrix) -> Result<Permutation> {
        let images = (0..self.num_points())
            .map(|i| Ok(self.index(&a.vec_mul(&self.field, &self.vector(i))?) as u32))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
            .map_err(|_| Error::InvalidArgument("singular matrix".into()))
    }

    pub fn translation(&self, t: &[FieldElement]) -> Permutation {
        let images = (0..self.num_points())
            .map(|i| self.index(&self.add(&self.vector(i), t)) as u32)
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Translations by `ε^k e_i`, `k < e`: they generate the full translation group.
    pub fn translation_generators(&self) -> Vec<Permutation> {
        let e = self.field.degree() as u64;
        let mut out = Vec::new();
        for i in 0..self.dim {
            for k in 0..e {
                let mut t = vec![FieldElement::ZERO; self.dim];
                t[i] = self.field.exp(k);
                out.push(self.translation(&t));
            }
        }
        out
    }

    pub fn frobenius_permutation(&self) -> Permutation {
        let images = (0..self.num_points())
            .map(|i| {
                let v: Vec<FieldElement> =
                    self.vector(i).iter().map(|&x| self.field.frobenius(x, 1)).collect();
                self.index(&v) as u32
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

/// Transvections `x_{i,i+1}(ε^k)` and `x_{i+1,i}(ε^k)`, `k < e`; they generate SL(d, q).
pub fn sl_generators(field: &FiniteField, d: usize) -> Vec<FqMatrix> {
    let e = field.degree() as u64;
    let mut out = Vec::new();
    for i in 0..d.saturating_sub(1) {
        for k in 0..e {
            let a = field.exp(k);
            out.push(FqMatrix::transvection(d, i, i + 1, a));
            out.push(FqMatrix::transvection(d, i + 1, i, a));
        }
    }
    out
}

/// `diag(ε, 1, …, 1)`; with SL(d, q) it generates GL(d, q).
pub fn gl_extra_generator(field: &FiniteField, d: usize) -> FqMatrix {
    let mut diag = vec![FieldElement::ONE; d];
    diag[0] = field.primitive_element();
    FqMatrix::diagonal(&diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::from_order(q).unwrap())
    }

    #[test]
    fn projective_counts() {
        let f = gf(2);
        assert_eq!(projective_objects(&f, 4, ObjectKind::Points).unwrap().len(), 15);
        assert_eq!(projective_objects(&f, 4, ObjectKind::Lines).unwrap().len(), 35);
        assert!(projective_objects(&f, 2, ObjectKind::Lines).is_err());
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q);
            assert_eq!(
                projective_objects(&f, 2, ObjectKind::Points).unwrap().len(),
                q as usize + 1
            );
        }
    }

    #[test]
    fn gaussian_binomials_match_enumeration() {
        for q in [2u32, 3, 4, 5, 7] {
            let f = gf(q);
            for n in 1..=5usize {
                if gaussian_binomial(n as u32, 1, q as u64) > 400 {
                    continue;
                }
                for k in 0..=n {
                    assert_eq!(
                        subspaces(&f, n, k).len() as u128,
                        gaussian_binomial(n as u32, k as u32, q as u64),
                        "q={q} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn affine_hyperplanes() {
        let a = AffineSpace::new(gf(2), 3);
        let pc = a.hyperplane_cosets().unwrap();
        assert_eq!(pc.classes.len(), 7);
        assert_eq!(pc.blocks().len(), 14);
        assert!(pc.blocks().iter().all(|b| b.len() == 4));
        let a = AffineSpace::new(gf(4), 2);
        assert_eq!(a.hyperplane_cosets().unwrap().blocks().len(), 20);
        let a = AffineSpace::new(gf(2), 4);
        let blocks = a.hyperplane_cosets().unwrap().blocks();
        assert_eq!(blocks.len(), 30);
        assert!(blocks.iter().all(|b| b.len() == 8));
    }

    #[test]
    fn points_are_normalised_and_sorted() {
        let pg = ProjectiveSpace::new(gf(3), 3).unwrap();
        assert_eq!(pg.num_points(), 13);
        for i in 0..pg.num_points() {
            let p = pg.point(i);
            assert_eq!(*p.iter().find(|x| !x.is_zero()).unwrap(), FieldElement::ONE);
            assert_eq!(pg.point_index(p), Some(i));
        }
    }

    #[test]
    fn frobenius_is_trivial_over_prime_fields() {
        let pg = ProjectiveSpace::new(gf(5), 3).unwrap();
        assert!(pg.frobenius_permutation().is_identity());
    }
}
