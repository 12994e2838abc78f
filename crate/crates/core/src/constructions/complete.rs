use super::Construction;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::permgroup::GeneratedGroup;
use crate::util::SubsetRanker;
use crate::util::binomial;

/// Every `k`-subset of `0..v` as a block.
pub fn complete_design(v: usize, k: usize) -> Result<Design> {
    if !(2..=v).contains(&k) {
        return Err(Error::InvalidArgument(format!("C(v,k) needs 1 < k <= v, got v = {v}, k = {k}")));
    }
    let count = binomial(v as u64, k as u64);
    if count > 1_000_000 {
        return Err(Error::InvalidArgument(format!("C({v},{k}) has {count} blocks")));
    }
    let ranker = SubsetRanker::new(v, k);
    let blocks = (0..count as u64).map(|r| ranker.unrank(r, k)).collect();
    Design::new(v, blocks, format!("C({v},{k})"))
}

/// `C(v,k)` with the full symmetric group.
pub fn complete_with_symmetric(v: usize, k: usize) -> Result<Construction> {
    Ok(Construction::new(complete_design(v, k)?, GeneratedGroup::symmetric(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn near_complete_is_symmetric() {
        let d = complete_design(5, 4).unwrap();
        let p = d.parameters();
        assert_eq!(d.b(), 5);
        assert!(p.is_symmetric());
        assert_eq!((p.k, p.lambda), (Some(4), Some(3)));
    }

    #[test]
    fn counts_and_trivial_cases() {
        assert_eq!(complete_design(6, 3).unwrap().b(), 20);
        let full = complete_design(4, 4).unwrap();
        assert_eq!(full.b(), 1);
        assert!(full.parameters().is_trivial());
        assert!(complete_design(4, 1).is_err());
        assert!(complete_design(4, 5).is_err());
    }
}
