//! Quadratic forms on GF(2)^{2m} polarising to a fixed alternating form, and the
//! symplectic groups acting on them.
//!
//! Vectors are bit masks: bit `i` is coordinate `i`. The alternating form is
//! `B(x, y) = Σ_i (x_{2i} y_{2i+1} + x_{2i+1} y_{2i})`, and every form polarising to it is
//! `Q_a(x) = Σ_i x_{2i} x_{2i+1} + a·x` for a unique mask `a` with `a_i = Q_a(e_i)`.

use std::sync::Arc;

use super::field::{FieldElement, FiniteField};
use super::matrix::FqMatrix;
use crate::error::{Error, Result};
use crate::permgroup::{GeneratedGroup, Permutation};

/// Largest half-dimension handled (4096 vectors).
pub const MAX_HALF_DIM: usize = 6;

fn even_mask(m: usize) -> u32 {
    (0..m).fold(0, |acc, i| acc | 1 << (2 * i))
}

fn parity(x: u32) -> bool {
    x.count_ones() % 2 == 1
}

/// The fixed alternating form on GF(2)^{2m}.
pub fn alternating_form(m: usize, x: u32, y: u32) -> bool {
    let ev = even_mask(m);
    parity((x & ev & (y >> 1)) ^ ((x >> 1) & ev & y))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormType {
    Hyperbolic,
    Elliptic,
}

/// A quadratic form `Σ_{i≤j} c_ij x_i x_j` over GF(2); row `i` holds bits `c_ij`, `j ≥ i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    m: usize,
    rows: Vec<u32>,
    kind: FormType,
}

impl QuadraticForm {
    /// `Q_a`, whose polarisation is the fixed alternating form.
    pub fn shifted(m: usize, a: u32) -> Result<Self> {
        if m == 0 || m > MAX_HALF_DIM {
            return Err(Error::InvalidArgument(format!("half-dimension {m} unsupported")));
        }
        if a >> (2 * m) != 0 {
            return Err(Error::InvalidArgument(format!("shift {a:#b} too long")));
        }
        let mut rows = vec![0u32; 2 * m];
        for (i, row) in rows.iter_mut().enumerate() {
            if a >> i & 1 == 1 {
                *row |= 1 << i;
            }
            if i % 2 == 0 {
                *row |= 1 << (i + 1);
            }
        }
        Self::from_rows(m, rows)
    }

    /// From upper-triangular rows; the type is decided by counting zeros.
    pub fn from_rows(m: usize, rows: Vec<u32>) -> Result<Self> {
        if rows.len() != 2 * m {
            return Err(Error::InvalidArgument("wrong number of rows".into()));
        }
        for (i, &r) in rows.iter().enumerate() {
            if r & ((1u32 << i) - 1) != 0 || r >> (2 * m) != 0 {
                return Err(Error::InvalidArgument("rows must be upper triangular".into()));
            }
        }
        let mut q = QuadraticForm {
            m,
            rows,
            kind: FormType::Hyperbolic,
        };
        let zeros = q.zero_count();
        let big = (1usize << (2 * m - 1)) + (1usize << (m - 1));
        let small = (1usize << (2 * m - 1)) - (1usize << (m - 1));
        q.kind = if zeros == big {
            FormType::Hyperbolic
        } else if zeros == small {
            FormType::Elliptic
        } else {
            return Err(Error::InvalidArgument(format!(
                "degenerate form with {zeros} zeros"
            )));
        };
        Ok(q)
    }

    pub fn half_dim(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn kind(&self) -> FormType {
        self.kind
    }

    pub fn eval(&self, x: u32) -> bool {
        let mut acc = false;
        for (i, &row) in self.rows.iter().enumerate() {
            if x >> i & 1 == 1 {
                acc ^= parity(row & x);
            }
        }
        acc
    }

    /// `Q(x+y) + Q(x) + Q(y)`.
    pub fn polarisation(&self, x: u32, y: u32) -> bool {
        self.eval(x ^ y) ^ self.eval(x) ^ self.eval(y)
    }

    pub fn zero_count(&self) -> usize {
        (0..1u32 << (2 * self.m)).filter(|&x| !self.eval(x)).count()
    }

    /// The mask `a` with `a_i = Q(e_i)`.
    pub fn shift(&self) -> u32 {
        (0..2 * self.m).fold(0, |acc, i| acc | (self.rows[i] >> i & 1) << i)
    }

    pub fn zeros(&self) -> Vec<u32> {
        (0..1u32 << (2 * self.m)).filter(|&x| !self.eval(x)).collect()
    }

    /// `x ↦ Q(x + t)` written as `Q'(x) + c`, with `Q'` polarising to the same form.
    pub fn translate(&self, t: u32) -> (QuadraticForm, bool) {
        // Q(x+t) = Q(x) + B(x,t) + Q(t); B(·,t) is the linear functional with mask t̃,
        // where t̃ swaps the two bits of each hyperbolic pair.
        let ev = even_mask(self.m);
        let swapped = ((t & ev) << 1) | ((t >> 1) & ev);
        let q = QuadraticForm::shifted(self.m, self.shift() ^ swapped).expect("same half-dimension");
        (q, self.eval(t))
    }
}

/// All `2^{2m}` forms polarising to the fixed alternating form, indexed by shift.
pub fn forms_polarising(m: usize) -> Result<Vec<QuadraticForm>> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    (0..1u32 << (2 * m)).map(|a| QuadraticForm::shifted(m, a)).collect()
}

/// A GF(2)-linear map on bit vectors: `images[i]` is the image of `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Linear {
    images: Vec<u32>,
}

impl Gf2Linear {
    pub fn new(images: Vec<u32>) -> Self {
        Gf2Linear { images }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, _)| x >> i & 1 == 1)
            .fold(0, |acc, (_, &img)| acc ^ img)
    }

    /// `x ↦ x + B(x, v) v`.
    pub fn transvection(m: usize, v: u32) -> Self {
        Gf2Linear {
            images: (0..2 * m)
                .map(|i| {
                    let e = 1u32 << i;
                    if alternating_form(m, e, v) {
                        e ^ v
                    } else {
                        e
                    }
                })
                .collect(),
        }
    }

    pub fn preserves_form(&self, m: usize) -> bool {
        (0..2 * m).all(|i| {
            (0..2 * m).all(|j| {
                alternating_form(m, self.images[i], self.images[j])
                    == alternating_form(m, 1 << i, 1 << j)
            })
        })
    }

    pub fn to_matrix(&self) -> FqMatrix {
        let n = self.images.len();
        let rows = self
            .images
            .iter()
            .map(|&r| (0..n).map(|j| FieldElement(r >> j & 1)).collect())
            .collect();
        FqMatrix::from_rows(rows).expect("square")
    }

    pub fn on_vectors(&self) -> Permutation {
        let n = 1u32 << self.images.len();
        Permutation::from_images((0..n).map(|x| self.apply(x)).collect())
            .expect("invertible linear map")
    }
}

/// `|Sp(2n, q)| = q^{n²} Π_{i=1}^{n} (q^{2i} − 1)`.
pub fn symplectic_order(n: u32, q: u128) -> u128 {
    (1..=n).fold(q.pow(n * n), |acc, i| acc * (q.pow(2 * i) - 1))
}

/// A subgroup of Sp(2m, 2) with its actions on vectors and on the forms `Q_a`.
#[derive(Clone, Debug)]
pub struct SymplecticGroup {
    pub m: usize,
    pub generators: Vec<Gf2Linear>,
    /// Degree `2^{2m}`, point `x` the vector with mask `x`.
    pub on_vectors: GeneratedGroup,
    /// Degree `2^{2m}`, point `a` the form `Q_a`; `g` maps `Q` to `Q ∘ g^{-1}`.
    pub on_forms: GeneratedGroup,
}

impl SymplecticGroup {
    fn from_generators(m: usize, generators: Vec<Gf2Linear>, label: String, expected: u128) -> Result<Self> {
        let n = 1usize << (2 * m);
        let vec_perms: Vec<Permutation> = generators.iter().map(|g| g.on_vectors()).collect();
        let form_perms: Vec<Permutation> = vec_perms
            .iter()
            .map(|g| {
                let inv = g.inverse();
                let images = (0..n as u32)
                    .map(|a| {
                        let q = QuadraticForm::shifted(m, a).expect("valid shift");
                        (0..2 * m).fold(0u32, |acc, i| {
                            acc | (q.eval(inv.apply(1 << i) as u32) as u32) << i
                        })
                    })
                    .collect();
                Permutation::from_images(images)
            })
            .collect::<Result<Vec<_>>>()?;
        let on_vectors = GeneratedGroup::new(n, vec_perms, label.clone())?;
        let found = on_vectors.order();
        if found != expected {
            return Err(Error::OrderMismatch {
                label,
                expected,
                found,
            });
        }
        let on_forms = GeneratedGroup::new(n, form_perms, label)?;
        Ok(SymplecticGroup {
            m,
            generators,
            on_vectors,
            on_forms,
        })
    }

    pub fn order(&self) -> u128 {
        self.on_vectors.order()
    }

    /// Commutator subgroup, as a group of linear maps.
    pub fn derived(&self) -> Result<SymplecticGroup> {
        let d = self.on_vectors.derived_subgroup();
        let order = d.order();
        let generators: Vec<Gf2Linear> = d
            .generators()
            .iter()
            .map(|p| Gf2Linear::new((0..2 * self.m).map(|i| p.apply(1 << i) as u32).collect()))
            .collect();
        let label = format!("{}'", self.on_vectors.label());
        Self::from_generators(self.m, generators, label, order)
    }
}

/// Vectors whose transvections generate Sp(2m, 2): `e_i` and `e_i + e_{i+1}`.
fn transvection_vectors(m: usize) -> Vec<u32> {
    let mut vs: Vec<u32> = (0..2 * m).map(|i| 1 << i).collect();
    vs.extend((0..2 * m - 1).map(|i| (1 << i) | (1 << (i + 1))));
    vs
}

/// Sp(2m, 2) generated by symplectic transvections; the order is checked by the chain.
pub fn symplectic_group(m: usize) -> Result<SymplecticGroup> {
    if !(2..=MAX_HALF_DIM).contains(&m) {
        return Err(Error::InvalidArgument(format!("Sp(2m,2) needs 2 <= m <= {MAX_HALF_DIM}")));
    }
    let gens = transvection_vectors(m)
        .into_iter()
        .map(|v| Gf2Linear::transvection(m, v))
        .collect();
    SymplecticGroup::from_generators(
        m,
        gens,
        format!("Sp({},2)", 2 * m),
        symplectic_order(m as u32, 2),
    )
}

/// Sp(2m/e, 2^e) inside Sp(2m, 2), via the trace of the GF(2^e)-symplectic form.
pub fn subfield_symplectic_group(m: usize, e: usize) -> Result<SymplecticGroup> {
    if e == 0 || !m.is_multiple_of(e) || !(1..=MAX_HALF_DIM).contains(&m) {
        return Err(Error::InvalidArgument(format!("need e | m, got m = {m}, e = {e}")));
    }
    if e == 1 {
        return symplectic_group(m);
    }
    let field = Arc::new(FiniteField::new(2, e as u32)?);
    let small = m / e;
    let dim = 2 * m;
    // ψ: bit i*e + k of a mask is digit k of coordinate i of W = GF(2^e)^{2·small}.
    let to_w = |x: u32| -> Vec<FieldElement> {
        (0..2 * small)
            .map(|i| FieldElement((x >> (i * e)) & ((1 << e) - 1)))
            .collect()
    };
    let from_w = |w: &[FieldElement]| -> u32 {
        w.iter().enumerate().fold(0, |acc, (i, x)| acc | x.0 << (i * e))
    };
    let f_form = |u: &[FieldElement], w: &[FieldElement]| -> FieldElement {
        (0..small).fold(FieldElement::ZERO, |acc, i| {
            let t = field.add(
                field.mul(u[2 * i], w[2 * i + 1]),
                field.mul(u[2 * i + 1], w[2 * i]),
            );
            field.add(acc, t)
        })
    };
    let trace_form = |x: u32, y: u32| -> bool { field.trace(f_form(&to_w(x), &to_w(y))) == FieldElement::ONE };

    // Symplectic basis for the trace form: phi(e_j) = basis[j].
    let mut pool: Vec<u32> = (0..dim).map(|i| 1u32 << i).collect();
    let mut basis: Vec<u32> = Vec::with_capacity(dim);
    while let Some(u) = pool.first().copied() {
        pool.remove(0);
        let pos = pool
            .iter()
            .position(|&w| trace_form(u, w))
            .ok_or_else(|| Error::InvalidArgument("trace form is degenerate".into()))?;
        let w = pool.remove(pos);
        basis.push(u);
        basis.push(w);
        for x in pool.iter_mut() {
            let mut y = *x;
            if trace_form(y, w) {
                y ^= u;
            }
            if trace_form(*x, u) {
                y ^= w;
            }
            *x = y;
        }
        pool.retain(|&x| x != 0);
    }
    let phi = Gf2Linear::new(basis);
    let n = 1usize << dim;
    let mut phi_inv = vec![0u32; n];
    for x in 0..n as u32 {
        phi_inv[phi.apply(x) as usize] = x;
    }

    // Sp(2·small, 2^e) generated by u ↦ u + a f(u, v) v, v in the GF(2)-pattern vectors
    // e_i and e_i + e_{i+1}, a = ε^k.
    let mut gens = Vec::new();
    for v_mask in transvection_vectors(small) {
        let v: Vec<FieldElement> = (0..2 * small)
            .map(|i| FieldElement(v_mask >> i & 1))
            .collect();
        for k in 0..e as u64 {
            let a = field.exp(k);
            let images = (0..dim)
                .map(|j| {
                    // g' = φ^{-1} ∘ g ∘ φ on the basis vector e_j
                    let u = to_w(phi.apply(1 << j));
                    let c = field.mul(a, f_form(&u, &v));
                    let img: Vec<FieldElement> = u
                        .iter()
                        .zip(&v)
                        .map(|(&ui, &vi)| field.add(ui, field.mul(c, vi)))
                        .collect();
                    phi_inv[from_w(&img) as usize]
                })
                .collect();
            let g = Gf2Linear::new(images);
            debug_assert!(g.preserves_form(m));
            gens.push(g);
        }
    }
    SymplecticGroup::from_generators(
        m,
        gens,
        format!("Sp({},{})", 2 * small, 1 << e),
        symplectic_order(small as u32, 1u128 << e),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_counts_m2() {
        let forms = forms_polarising(2).unwrap();
        assert_eq!(forms.len(), 16);
        let hyper = forms.iter().filter(|q| q.zero_count() == 10).count();
        let ell = forms.iter().filter(|q| q.zero_count() == 6).count();
        assert_eq!((hyper, ell), (10, 6));
        assert_eq!(forms[0].kind(), FormType::Hyperbolic);
    }

    #[test]
    fn x1_squared_plus_x2_squared_is_elliptic_m3() {
        // x_1^2 + x_2^2 + Σ x_{2i-1}x_{2i} in 1-based coordinates: shift a = 0b11.
        let q = QuadraticForm::shifted(3, 0b11).unwrap();
        assert_eq!(q.kind(), FormType::Elliptic);
        assert_eq!(q.zero_count(), 28);
    }

    #[test]
    fn polarisation_identity_exhaustive() {
        for m in 1..=3 {
            for q in forms_polarising(m).unwrap() {
                for x in 0..1u32 << (2 * m) {
                    for y in 0..1u32 << (2 * m) {
                        assert_eq!(q.polarisation(x, y), alternating_form(m, x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn translation_preserves_type() {
        for m in 1..=3 {
            for q in forms_polarising(m).unwrap() {
                for t in 0..1u32 << (2 * m) {
                    let (q2, c) = q.translate(t);
                    for x in 0..1u32 << (2 * m) {
                        assert_eq!(q.eval(x ^ t), q2.eval(x) ^ c);
                    }
                    // x ↦ Q(x + t) has the zero count of Q; the shifted form flips
                    // type exactly when the constant is 1.
                    assert_eq!((q2.kind() == q.kind()), !c);
                }
            }
        }
    }

    #[test]
    fn reject_non_triangular_rows() {
        assert!(QuadraticForm::from_rows(1, vec![0b10, 0b01]).is_err());
    }

    #[test]
    fn sp4_2() {
        let sp = symplectic_group(2).unwrap();
        assert_eq!(sp.order(), 720);
        let mut sizes: Vec<usize> = sp.on_forms.orbits().iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![6, 10]);
        assert!(sp.generators.iter().all(|g| g.preserves_form(2)));
        assert_eq!(sp.derived().unwrap().order(), 360);
    }

    #[test]
    fn sp6_2() {
        assert_eq!(symplectic_group(3).unwrap().order(), 1_451_520);
    }

    #[test]
    fn subfield_groups() {
        assert_eq!(subfield_symplectic_group(2, 2).unwrap().order(), 60);
        let sp28 = subfield_symplectic_group(3, 3).unwrap();
        assert_eq!(sp28.order(), 504);
        assert!(sp28.generators.iter().all(|g| g.preserves_form(3)));
        assert!(subfield_symplectic_group(3, 2).is_err());
    }
}
