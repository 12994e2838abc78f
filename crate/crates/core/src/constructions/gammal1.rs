//! Subgroups of ΓL(1, p^d) in standard form `⟨τ^i, τ^j σ^t⟩`, where `τ: x ↦ εx` for a
//! primitive element `ε` and `σ: x ↦ x^p`.

use std::fmt;

use num_prime::nt_funcs::is_prime64;

use crate::algebra::{FieldElement, FiniteField};
use crate::error::{Error, Result};
use crate::permgroup::{GeneratedGroup, Permutation};

/// Largest field order for which the permutation group is built.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GammaL1Subgroup {
    p: u64,
    d: u32,
    i: u64,
    j: u64,
    t: u32,
}

/// `(p^{kt} - 1)/(p^t - 1) mod m`, computed as a geometric sum.
fn geometric_mod(p: u64, t: u32, k: u64, m: u64) -> u64 {
    let m = m as u128;
    let step = (0..t).fold(1u128 % m, |acc, _| acc * p as u128 % m);
    let (mut sum, mut term) = (0u128, 1u128 % m);
    for _ in 0..k {
        sum = (sum + term) % m;
        term = term * step % m;
    }
    sum as u64
}

fn divides_scaled(i: u64, j: u64, p: u64, t: u32, k: u64) -> bool {
    ((j % i) as u128 * geometric_mod(p, t, k, i) as u128).is_multiple_of(i as u128)
}

impl GammaL1Subgroup {
    /// Checks the standard-form conditions.
    pub fn new(p: u64, d: u32, i: u64, j: u64, t: u32) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if !is_prime64(p) {
            return bad(format!("{p} is not prime"));
        }
        if d == 0 {
            return bad("d must be positive".into());
        }
        let order = match p.checked_pow(d) {
            Some(q) => q - 1,
            None => return bad(format!("{p}^{d} overflows 64 bits")),
        };
        if i == 0 || order % i != 0 {
            return bad(format!("i = {i} must be a positive divisor of {order}"));
        }
        if t == 0 || !d.is_multiple_of(t) {
            return bad(format!("t = {t} must be a positive divisor of d = {d}"));
        }
        if j >= i {
            return bad(format!("need 0 <= j < i, got j = {j}, i = {i}"));
        }
        if !divides_scaled(i, j, p, t, (d / t) as u64) {
            return bad(format!("i = {i} does not divide j(p^d-1)/(p^t-1) for j = {j}, t = {t}"));
        }
        Ok(GammaL1Subgroup { p, d, i, j, t })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `(p^d - 1)/i · d/t`.
    pub fn order(&self) -> u64 {
        (self.p.pow(self.d) - 1) / self.i * (self.d / self.t) as u64
    }
}

impl fmt::Display for GammaL1Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<tau^{}, tau^{} sigma^{}> in GammaL(1,{}^{})",
            self.i, self.j, self.t, self.p, self.d
        )
    }
}

/// Transitivity on the non-zero field elements, by the number-theoretic criterion.
pub fn gammal1_is_transitive(s: &GammaL1Subgroup) -> bool {
    let (i, j, p, t) = (s.i, s.j, s.p, s.t);
    if i == 1 {
        return true;
    }
    j > 0 && divides_scaled(i, j, p, t, i) && !(2..i).any(|k| divides_scaled(i, j, p, t, k))
}

/// The subgroup acting on the `p^d` field elements, element `x` at index `x.0`.
/// The second generator is `x ↦ ε^j x^{p^t}`.
pub fn gammal1_group(s: &GammaL1Subgroup) -> Result<GeneratedGroup> {
    let q = s.p.pow(s.d);
    if q > MAX_FIELD_ORDER {
        return Err(Error::InvalidArgument(format!("GF({q}) is too large to enumerate")));
    }
    let field = FiniteField::new(s.p as u32, s.d)?;
    let mult = field.exp(s.i);
    let twist = field.exp(s.j);
    let perm = |f: &dyn Fn(FieldElement) -> FieldElement| {
        Permutation::from_images(field.elements().map(|x| f(x).0).collect())
    };
    let tau_i = perm(&|x| field.mul(mult, x))?;
    let tau_sigma = perm(&|x| field.mul(twist, field.frobenius(x, s.t)))?;
    GeneratedGroup::new(q as usize, vec![tau_i, tau_sigma], s.to_string())
}

/// Transitivity on the non-zero elements, by computing the orbit of 1.
pub fn gammal1_orbit_is_transitive(s: &GammaL1Subgroup) -> Result<bool> {
    let g = gammal1_group(s)?;
    Ok(g.orbit(FieldElement::ONE.index())?.len() as u64 == s.p.pow(s.d) - 1)
}

/// Every standard-form triple `(i, j, t)` for GF(p^d).
pub fn standard_triples(p: u64, d: u32) -> Result<Vec<GammaL1Subgroup>> {
    let order = p
        .checked_pow(d)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{d} overflows 64 bits")))?
        - 1;
    let mut out = Vec::new();
    for i in (1..=order).filter(|i| order % i == 0) {
        for t in (1..=d).filter(|t| d.is_multiple_of(*t)) {
            for j in 0..i {
                if divides_scaled(i, j, p, t, (d / t) as u64) {
                    out.push(GammaL1Subgroup::new(p, d, i, j, t)?);
                }
            }
        }
    }
    Ok(out)
}
