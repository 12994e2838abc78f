//! Dense matrices over a [`FiniteField`]. Vectors are rows and act by `v ↦ vA`.

use super::field::{FieldElement, FiniteField};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Reduced row-echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: FqMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows.
    pub fn basis(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rank()).map(|i| self.matrix.row(i).to_vec()).collect()
    }
}

impl FqMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            entries: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(FqMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_u32_rows(rows: &[&[u32]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| FieldElement(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, field: &FiniteField, other: &FqMatrix) -> Result<FqMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = FqMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let row = other.vec_mul_unchecked(field, self.row(i));
            out.entries[i * other.cols..(i + 1) * other.cols].copy_from_slice(&row);
        }
        Ok(out)
    }

    fn vec_mul_unchecked(&self, field: &FiniteField, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = field.add(*o, field.mul(vi, self.get(i, j)));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, field: &FiniteField, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.rows {
            return Err(Error::DegreeMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        Ok(self.vec_mul_unchecked(field, v))
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut t = FqMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Entrywise `x ↦ x^(p^k)`.
    pub fn frobenius(&self, field: &FiniteField, k: u32) -> FqMatrix {
        FqMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| field.frobenius(x, k)).collect(),
        }
    }

    pub fn rref(&self, field: &FiniteField) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let (a, b) = (m.get(r, j), m.get(pr, j));
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = field.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                m.set(r, j, field.mul(inv, m.get(r, j)));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = field.sub(m.get(i, j), field.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self, field: &FiniteField) -> usize {
        self.rref(field).rank()
    }

    pub fn is_invertible(&self, field: &FiniteField) -> bool {
        self.rows == self.cols && self.rank(field) == self.rows
    }

    pub fn inverse(&self, field: &FiniteField) -> Result<FqMatrix> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument("non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = FqMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, FieldElement::ONE);
        }
        let ech = aug.rref(field);
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return Err(Error::InvalidArgument("singular matrix".into()));
        }
        let mut inv = FqMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, ech.matrix.get(i, n + j));
            }
        }
        Ok(inv)
    }

    /// Elementary transvection `I + a E_{ij}`.
    pub fn transvection(n: usize, i: usize, j: usize, a: FieldElement) -> FqMatrix {
        let mut m = FqMatrix::identity(n);
        m.set(i, j, a);
        m
    }

    pub fn diagonal(diag: &[FieldElement]) -> FqMatrix {
        let mut m = FqMatrix::zero(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }
}

/// Canonical basis of the row space of `vectors`: nonzero RREF rows.
pub fn span_basis(field: &FiniteField, vectors: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    FqMatrix::from_rows(vectors.to_vec())
        .expect("vectors share a length")
        .rref(field)
        .basis()
}
