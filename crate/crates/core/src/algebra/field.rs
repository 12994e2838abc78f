//! GF(p^e) with elements indexed `0..q`.
//!
//! Element `a` has base-`p` digits `a_0, a_1, …` and stands for `Σ a_i x^i` modulo the
//! defining polynomial. Multiplication goes through log/exp tables over the least
//! primitive element.

use std::fmt;

use crate::error::{Error, Result};

/// Index of an element of a [`FiniteField`]. Meaningful only together with its field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fixed defining polynomials: coefficients of `x^0 … x^{e-1}`, leading 1 implied.
const DEFAULT_POLYNOMIALS: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (3, 2, &[2, 1]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
];

/// Largest field order supported.
pub const MAX_ORDER: u32 = 1 << 16;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `q` as `p^e`, if it is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    poly: Vec<u32>,
    primitive: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u16>>,
}

/// Multiplies digit vectors modulo the monic polynomial `x^e + Σ poly_i x^i`.
fn poly_mul(a: &[u32], b: &[u32], poly: &[u32], p: u32) -> Vec<u32> {
    let e = poly.len();
    let mut prod = vec![0u32; 2 * e];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for k in (e..2 * e).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        // x^k = x^{k-e} * x^e = -x^{k-e} Σ poly_i x^i
        for (i, &pi) in poly.iter().enumerate() {
            prod[k - e + i] = (prod[k - e + i] + (p - pi % p) * c) % p;
        }
    }
    prod.truncate(e);
    prod
}

fn digits_of(mut a: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn index_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplicative order of `a` in the quotient ring, if at most `q - 1`.
fn element_order_in_ring(p: u32, e: u32, poly: &[u32], a: u32) -> Option<u32> {
    let q = p.pow(e);
    let c = digits_of(a, p, e);
    let mut acc = c.clone();
    for k in 1..q {
        if index_of(&acc, p) == 1 {
            return Some(k);
        }
        acc = poly_mul(&acc, &c, poly, p);
    }
    None
}

/// Least element of multiplicative order `q - 1` in the quotient ring, if it is a field.
fn least_primitive(p: u32, e: u32, poly: &[u32]) -> Option<u32> {
    let q = p.pow(e);
    (1..q).find(|&a| element_order_in_ring(p, e, poly, a) == Some(q - 1))
}

impl FiniteField {
    /// GF(p^e) with the documented default polynomial, or the least polynomial (by
    /// coefficient index) for which `x` is primitive when no default is listed.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) || e == 0 {
            return Err(Error::InvalidArgument(format!("GF({p}^{e}) is not a field order")));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER as u64).ok_or_else(|| {
            Error::InvalidArgument(format!("GF({p}^{e}) exceeds the supported size"))
        })? as u32;
        if e == 1 {
            return Self::with_polynomial(p, 1, vec![0]);
        }
        if let Some(&(_, _, poly)) = DEFAULT_POLYNOMIALS.iter().find(|&&(pp, ee, _)| pp == p && ee == e) {
            return Self::with_polynomial(p, e, poly.to_vec());
        }
        for code in 0..q {
            let poly = digits_of(code, p, e);
            if poly[0] == 0 {
                continue;
            }
            if element_order_in_ring(p, e, &poly, p) == Some(q - 1) {
                return Self::with_polynomial(p, e, poly);
            }
        }
        Err(Error::InvalidArgument(format!("no primitive polynomial for GF({p}^{e})")))
    }

    pub fn from_order(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q as u64)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        Self::new(p, e)
    }

    /// Field with the given monic polynomial; fails if it is reducible.
    pub fn with_polynomial(p: u32, e: u32, poly: Vec<u32>) -> Result<Self> {
        if poly.len() != e as usize || poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument("malformed polynomial".into()));
        }
        let q = p.pow(e);
        let eps = least_primitive(p, e, &poly).ok_or_else(|| {
            Error::InvalidArgument(format!("polynomial {poly:?} is reducible over GF({p})"))
        })?;
        let eps_digits = digits_of(eps, p, e);
        let mut exp = Vec::with_capacity(2 * (q as usize - 1));
        let mut log = vec![0u32; q as usize];
        let mut acc = digits_of(1, p, e);
        for k in 0..q - 1 {
            let idx = index_of(&acc, p);
            exp.push(idx);
            log[idx as usize] = k;
            acc = poly_mul(&acc, &eps_digits, &poly, p);
        }
        let first_cycle = exp.clone();
        exp.extend(first_cycle);
        let add_table = (q <= 256).then(|| {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = digits_of(a, p, e);
                for b in 0..q {
                    let db = digits_of(b, p, e);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = index_of(&s, p) as u16;
                }
            }
            t
        });
        Ok(FiniteField {
            p,
            e,
            q,
            poly,
            primitive: FieldElement(eps),
            exp,
            log,
            add_table,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of `x^0 … x^{e-1}` of the monic defining polynomial.
    pub fn polynomial(&self) -> &[u32] {
        &self.poly
    }

    /// The least primitive element.
    pub fn primitive_element(&self) -> FieldElement {
        self.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        digits_of(a.0, self.p, self.e)
    }

    pub fn from_digits(&self, digits: &[u32]) -> FieldElement {
        FieldElement(index_of(digits, self.p))
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        match &self.add_table {
            Some(t) => FieldElement(t[(a.0 * self.q + b.0) as usize] as u32),
            None => {
                let s: Vec<u32> = self
                    .digits(a)
                    .iter()
                    .zip(self.digits(b))
                    .map(|(x, y)| (x + y) % self.p)
                    .collect();
                self.from_digits(&s)
            }
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let k = self.log[a.index()] + self.log[b.index()];
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::InvalidArgument("zero has no inverse".into()));
        }
        let k = (self.q - 1 - self.log[a.index()]) % (self.q - 1);
        Ok(FieldElement(self.exp[k as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Discrete log to the base [`primitive_element`](Self::primitive_element).
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (!a.is_zero()).then(|| self.log[a.index()])
    }

    /// `ε^k`.
    pub fn exp(&self, k: u64) -> FieldElement {
        FieldElement(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    pub fn pow(&self, a: FieldElement, n: u64) -> FieldElement {
        if n == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let k = (self.log[a.index()] as u64 * (n % (self.q as u64 - 1))) % (self.q as u64 - 1);
        FieldElement(self.exp[k as usize])
    }

    /// `a ↦ a^(p^k)`.
    pub fn frobenius(&self, a: FieldElement, k: u32) -> FieldElement {
        self.pow(a, (self.p as u64).pow(k % self.e))
    }

    /// Absolute trace to GF(p), as an element of the prime subfield.
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        (0..self.e).fold(FieldElement::ZERO, |acc, k| self.add(acc, self.frobenius(a, k)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / crate::util::gcd(l as u64, n as u64) as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDERS: &[u32] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256];

    #[test]
    fn tabled_polynomials_make_x_primitive() {
        for &(p, e, _) in DEFAULT_POLYNOMIALS {
            let f = FiniteField::new(p, e).unwrap();
            // Least primitive element is x itself, index p.
            assert_eq!(f.primitive_element(), FieldElement(p), "GF({p}^{e})");
        }
    }

    #[test]
    fn small_field_examples() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let x = FieldElement(2);
        assert_eq!(f4.mul(x, x), FieldElement(3)); // x^2 = x + 1
        let f9 = FiniteField::new(3, 2).unwrap();
        // x^2 = -x - 2 = 2x + 1
        assert_eq!(f9.mul(FieldElement(3), FieldElement(3)), FieldElement(7));
        let f7 = FiniteField::new(7, 1).unwrap();
        assert_eq!(f7.primitive_element(), FieldElement(3));
    }

    #[test]
    fn reducible_polynomial_rejected() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(FiniteField::with_polynomial(2, 2, vec![1, 0]).is_err());
        assert!(FiniteField::new(6, 1).is_err());
    }

    #[test]
    fn untabled_field_falls_back() {
        let f = FiniteField::new(2, 9).unwrap();
        assert_eq!(f.element_order(f.primitive_element()), Some(511));
    }

    #[test]
    fn field_axioms_exhaustive_inverses() {
        for &q in ORDERS {
            let f = FiniteField::from_order(q).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE, "q = {q}");
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
            }
            assert_eq!(f.element_order(f.primitive_element()), Some(q - 1));
        }
    }

    #[test]
    fn field_axioms_sampled_triples() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for &q in ORDERS {
            let f = FiniteField::from_order(q).unwrap();
            for _ in 0..400 {
                let (a, b, c) = (
                    FieldElement(rng.gen_range(0..q)),
                    FieldElement(rng.gen_range(0..q)),
                    FieldElement(rng.gen_range(0..q)),
                );
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
            }
        }
    }

    #[test]
    fn trace_lands_in_prime_field() {
        let f = FiniteField::new(2, 4).unwrap();
        let ones = f.elements().filter(|&a| f.trace(a) == FieldElement::ONE).count();
        assert_eq!(ones, 8);
        assert!(f.elements().all(|a| f.trace(a).0 < 2));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(243), Some((3, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
