use std::collections::BTreeSet;

use num_prime::nt_funcs::{factorize64, is_prime64};

use crate::error::{Error, Result};

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Primes dividing `p^d - 1` but no `p^c - 1` with `0 < c < d`.
pub fn zsigmondy_ppd(p: u64, d: u32) -> Result<BTreeSet<u64>> {
    if !is_prime64(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if d < 2 {
        return Err(Error::InvalidArgument(format!("need d >= 2, got {d}")));
    }
    let n = p
        .checked_pow(d)
        .ok_or_else(|| Error::InvalidArgument(format!("{p}^{d} overflows 64 bits")))?
        - 1;
    Ok(factorize64(n)
        .into_keys()
        .filter(|&s| (1..d as u64).all(|c| pow_mod(p, c, s) != 1))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn classical_cases() {
        assert_eq!(zsigmondy_ppd(2, 6).unwrap(), set(&[]));
        assert_eq!(zsigmondy_ppd(2, 4).unwrap(), set(&[5]));
        assert_eq!(zsigmondy_ppd(3, 4).unwrap(), set(&[5]));
        // 2^2 - 1 = 3 is itself primitive; Mersenne exception is p + 1 a power of 2, d = 2
        assert_eq!(zsigmondy_ppd(2, 2).unwrap(), set(&[3]));
        assert_eq!(zsigmondy_ppd(7, 2).unwrap(), set(&[]));
        assert!(zsigmondy_ppd(4, 3).is_err());
    }

    #[test]
    fn agrees_with_trial_division() {
        for p in [2u64, 3, 5, 7, 11] {
            for d in 2..=8u32 {
                let n = p.pow(d) - 1;
                let expected: BTreeSet<u64> = (2..=n)
                    .filter(|&s| n % s == 0 && (2..s).take_while(|f| f * f <= s).all(|f| s % f != 0))
                    .filter(|&s| (1..d).all(|c| (p.pow(c) - 1) % s != 0))
                    .collect();
                assert_eq!(zsigmondy_ppd(p, d).unwrap(), expected, "p = {p}, d = {d}");
                if n > 200_000 {
                    break;
                }
            }
        }
    }
}
