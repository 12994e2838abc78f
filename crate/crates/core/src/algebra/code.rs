//! Linear codes and the bundled Golay codes.
//!
//! `.code` files: `field p e`, `length n`, `dim k`, then `k` rows of `n` digits (each the
//! index of a field element), with `#` comments.

use std::sync::Arc;

use super::field::{FieldElement, FiniteField};
use super::matrix::FqMatrix;
use crate::data::DataSource;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<FiniteField>,
    length: usize,
    generator: FqMatrix,
    words: Vec<Vec<FieldElement>>,
    weight_enumerator: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GolayKind {
    Binary,
    Ternary,
}

impl LinearCode {
    pub fn new(field: Arc<FiniteField>, generator: FqMatrix) -> Result<Self> {
        let k = generator.rows();
        if generator.rank(&field) != k {
            return Err(Error::CodeInvariant("generator matrix is not of full rank".into()));
        }
        let q = field.order() as usize;
        let total = q
            .checked_pow(k as u32)
            .filter(|&t| t <= 1 << 20)
            .ok_or_else(|| Error::CodeInvariant("code too large to enumerate".into()))?;
        let length = generator.cols();
        let words: Vec<Vec<FieldElement>> = (0..total)
            .map(|c| {
                let coeffs = super::geometry::vector_from_index(&field, k, c);
                generator.vec_mul(&field, &coeffs).expect("k coefficients")
            })
            .collect();
        let mut weight_enumerator = vec![0usize; length + 1];
        for w in &words {
            weight_enumerator[w.iter().filter(|x| !x.is_zero()).count()] += 1;
        }
        Ok(LinearCode {
            field,
            length,
            generator,
            words,
            weight_enumerator,
        })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.generator
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_enumerator(&self) -> &[usize] {
        &self.weight_enumerator
    }

    pub fn minimum_weight(&self) -> Option<usize> {
        (1..=self.length).find(|&w| self.weight_enumerator[w] > 0)
    }

    pub fn codewords(&self) -> &[Vec<FieldElement>] {
        &self.words
    }

    pub fn words_of_weight(&self, w: usize) -> impl Iterator<Item = &Vec<FieldElement>> {
        self.words
            .iter()
            .filter(move |c| c.iter().filter(|x| !x.is_zero()).count() == w)
    }

    /// Supports of the words of weight `w`, each sorted, deduplicated, sorted.
    pub fn supports_of_weight(&self, w: usize) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self
            .words_of_weight(w)
            .map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn contains(&self, word: &[FieldElement]) -> bool {
        self.words.iter().any(|w| w == word)
    }
}

pub fn parse_code(text: &str, source: &str) -> Result<LinearCode> {
    let err = |line: usize, message: String| Error::Parse {
        source_name: source.to_string(),
        line,
        message,
    };
    let mut field: Option<(u32, u32)> = None;
    let mut length: Option<usize> = None;
    let mut dim: Option<usize> = None;
    let mut rows: Vec<Vec<FieldElement>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("field") => {
                let nums: Vec<u32> = parts
                    .map(|t| t.parse::<u32>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err(lineno, "bad field line".into()))?;
                if nums.len() != 2 {
                    return Err(err(lineno, "expected `field p e`".into()));
                }
                field = Some((nums[0], nums[1]));
            }
            Some("length") => {
                length = Some(
                    parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(lineno, "bad length".into()))?,
                )
            }
            Some("dim") => {
                dim = Some(
                    parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(lineno, "bad dim".into()))?,
                )
            }
            Some(word) => {
                let n = length.ok_or_else(|| err(lineno, "row before `length`".into()))?;
                let (p, e) = field.ok_or_else(|| err(lineno, "row before `field`".into()))?;
                let q = p.pow(e);
                let row = word
                    .chars()
                    .map(|c| c.to_digit(10).filter(|&d| d < q).map(FieldElement))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| err(lineno, format!("bad digit in row `{word}`")))?;
                if row.len() != n {
                    return Err(err(lineno, format!("row has {} entries, expected {n}", row.len())));
                }
                rows.push(row);
            }
            None => {}
        }
    }
    let (p, e) = field.ok_or_else(|| err(0, "missing `field` line".into()))?;
    let k = dim.ok_or_else(|| err(0, "missing `dim` line".into()))?;
    if rows.len() != k {
        return Err(err(0, format!("expected {k} rows, found {}", rows.len())));
    }
    let field = Arc::new(FiniteField::new(p, e)?);
    LinearCode::new(field, FqMatrix::from_rows(rows)?)
}

/// Loads a bundled Golay code and checks its defining invariants.
pub fn golay_code(kind: GolayKind, data: &DataSource) -> Result<LinearCode> {
    let (name, n, k, d, top_weight, top_count) = match kind {
        GolayKind::Binary => ("binary_golay.code", 24, 12, 8, 8, 759),
        GolayKind::Ternary => ("ternary_golay.code", 12, 6, 6, 12, 24),
    };
    let text = data.read(name)?;
    let code = parse_code(&text, name)?;
    let check = |ok: bool, what: String| {
        if ok {
            Ok(())
        } else {
            Err(Error::CodeInvariant(format!("{name}: {what}")))
        }
    };
    check(code.length() == n, format!("length {} != {n}", code.length()))?;
    check(code.dimension() == k, format!("dimension {} != {k}", code.dimension()))?;
    check(
        code.minimum_weight() == Some(d),
        format!("minimum weight {:?} != {d}", code.minimum_weight()),
    )?;
    let count = code.weight_enumerator()[top_weight];
    check(count == top_count, format!("{count} words of weight {top_weight}, expected {top_count}"))?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_golay_invariants() {
        let c = golay_code(GolayKind::Binary, &DataSource::Embedded).unwrap();
        let we = c.weight_enumerator();
        assert_eq!(we[0], 1);
        assert_eq!(we[8], 759);
        assert_eq!(we[12], 2576);
        assert_eq!(we[16], 759);
        assert_eq!(we[24], 1);
    }

    #[test]
    fn ternary_golay_invariants() {
        let c = golay_code(GolayKind::Ternary, &DataSource::Embedded).unwrap();
        let we = c.weight_enumerator();
        assert_eq!((we[0], we[6], we[9], we[12]), (1, 264, 440, 24));
        assert!(c.contains(&[FieldElement::ONE; 12]));
    }

    #[test]
    fn corrupted_row_is_fatal() {
        let text = DataSource::Embedded.read("binary_golay.code").unwrap();
        let bad = text.replacen("100000000000101011100011", "100000000000101011100010", 1);
        let code = parse_code(&bad, "bad").unwrap();
        assert_ne!(code.minimum_weight(), Some(8));
    }

    #[test]
    fn parse_errors_have_lines() {
        let text = "field 2 1\nlength 3\ndim 1\n1021\n";
        match parse_code(text, "x") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
