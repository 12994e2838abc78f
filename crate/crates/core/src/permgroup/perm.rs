//! Permutations of `{0, …, n-1}` stored as image vectors.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation on `degree()` points. `x^(ab) = (x^a)^b`: the left factor acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::NotAPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn from_images_usize(images: &[usize]) -> Result<Self> {
        Self::from_images(images.iter().map(|&x| x as u32).collect())
    }

    /// Trusted constructor for images already known to form a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                let y = cycle[(idx + 1) % cycle.len()];
                if x >= degree || y >= degree {
                    return Err(Error::PointOutOfRange {
                        point: x.max(y),
                        degree,
                    });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotAPermutation(format!(
                        "point {x} appears in more than one cycle"
                    )));
                }
                images[x] = y as u32;
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &y)| x as u32 == y)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(x, &y)| x as u32 != y)
            .map(|(x, _)| x)
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Cycles of length at least 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Image of a point set, sorted.
    pub fn image_of_set(&self, set: &[u32]) -> Vec<u32> {
        let mut img: Vec<u32> = set.iter().map(|&x| self.images[x as usize]).collect();
        img.sort_unstable();
        img
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(4, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn left_factor_acts_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.compose(&b).apply(0), 2);
        assert_eq!(b.compose(&a).apply(0), 1);
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_cycles(6, &[&[3, 5], &[0, 2, 1]]).unwrap();
        assert_eq!(p.to_string(), "(0 2 1)(3 5)");
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm(9)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn composition_associates(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn power_by_order_is_identity(p in arb_perm(10)) {
            prop_assert!(p.pow(p.order()).is_identity());
        }
    }
}
