//! Bundled generator files: permutation groups and matrix groups.
//!
//! The `.mat` format lists matrices row by row; row `i` is the image of `e_i` under
//! `v ↦ vA`.
//!
//! ```text
//! field 2 1
//! dim 2
//! label GL(2,2)
//! expect-order 6
//! matrix
//! 11
//! 01
//! ```

use std::sync::Arc;

use crate::algebra::{linear_action, FieldElement, FiniteField, FqMatrix, LinearDomain};
use crate::data::DataSource;
use crate::error::{Error, Result};
use crate::permgroup::{parse_group, GeneratedGroup, GroupFile};

/// The bundled permutation groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sporadic {
    M11Degree11,
    M11Degree12,
    M24,
    HigmanSims,
    Psl27Degree8,
}

impl Sporadic {
    pub const ALL: [Sporadic; 5] = [
        Sporadic::M11Degree11,
        Sporadic::M11Degree12,
        Sporadic::M24,
        Sporadic::HigmanSims,
        Sporadic::Psl27Degree8,
    ];

    pub fn file_name(self) -> &'static str {
        match self {
            Sporadic::M11Degree11 => "m11_11.grp",
            Sporadic::M11Degree12 => "m11_12.grp",
            Sporadic::M24 => "m24.grp",
            Sporadic::HigmanSims => "hs_176.grp",
            Sporadic::Psl27Degree8 => "psl27_8.grp",
        }
    }
}

/// Loads a bundled group. The file must declare its order; order and any declared
/// transitivity are checked by the parser.
pub fn load_sporadic(which: Sporadic, data: &DataSource) -> Result<GroupFile> {
    let name = which.file_name();
    let file = parse_group(&data.read(name)?, name)?;
    if file.expected_order.is_none() {
        return Err(Error::Parse {
            source_name: name.to_string(),
            line: 0,
            message: "bundled group files must carry `expect-order`".into(),
        });
    }
    Ok(file)
}

#[derive(Clone, Debug)]
pub struct MatrixGroupFile {
    pub field: Arc<FiniteField>,
    pub dim: usize,
    pub label: String,
    pub expected_order: Option<u128>,
    pub matrices: Vec<FqMatrix>,
    pub notes: Vec<String>,
}

impl MatrixGroupFile {
    /// Permutation image on vectors or projective points, with the declared order checked.
    pub fn action(&self, domain: LinearDomain) -> Result<GeneratedGroup> {
        let group = linear_action(&self.matrices, &self.field, self.dim, domain, self.label.clone())?;
        if let Some(expected) = self.expected_order {
            let found = group.order();
            if found != expected {
                return Err(Error::OrderMismatch {
                    label: self.label.clone(),
                    expected,
                    found,
                });
            }
        }
        Ok(group)
    }
}

fn flush(
    pending: &mut Option<Vec<Vec<FieldElement>>>,
    dim: Option<usize>,
    matrices: &mut Vec<FqMatrix>,
    source: &str,
    line: usize,
) -> Result<()> {
    if let Some(rows) = pending.take() {
        let n = rows.len();
        if Some(n) != dim {
            return Err(Error::Parse {
                source_name: source.to_string(),
                line,
                message: format!("matrix has {n} rows, expected {}", dim.unwrap_or(0)),
            });
        }
        matrices.push(FqMatrix::from_rows(rows)?);
    }
    Ok(())
}

pub fn parse_matrix_group(text: &str, source: &str) -> Result<MatrixGroupFile> {
    let err = |line: usize, message: String| Error::Parse {
        source_name: source.to_string(),
        line,
        message,
    };
    let mut field: Option<Arc<FiniteField>> = None;
    let mut dim: Option<usize> = None;
    let mut label = String::from("G");
    let mut expected_order = None;
    let mut notes = Vec::new();
    let mut matrices = Vec::new();
    let mut pending: Option<Vec<Vec<FieldElement>>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(note) = line.strip_prefix('#') {
            notes.push(note.trim().to_string());
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "field" => {
                let nums: Vec<u32> = rest
                    .split_whitespace()
                    .map(|t| t.parse())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| err(lineno, "bad field line".into()))?;
                if nums.len() != 2 {
                    return Err(err(lineno, "expected `field p e`".into()));
                }
                field = Some(Arc::new(FiniteField::new(nums[0], nums[1])?));
            }
            "dim" => {
                dim = Some(rest.parse().map_err(|_| err(lineno, format!("bad dim `{rest}`")))?)
            }
            "label" => label = rest.to_string(),
            "expect-order" => {
                expected_order = Some(
                    rest.parse::<u128>()
                        .map_err(|_| err(lineno, format!("bad expected order `{rest}`")))?,
                )
            }
            "matrix" => {
                flush(&mut pending, dim, &mut matrices, source, lineno)?;
                if field.is_none() || dim.is_none() {
                    return Err(err(lineno, "`matrix` before `field` and `dim`".into()));
                }
                pending = Some(Vec::new());
            }
            word => {
                let rows = pending
                    .as_mut()
                    .ok_or_else(|| err(lineno, format!("unknown keyword `{word}`")))?;
                let q = field.as_ref().map(|f| f.order()).unwrap_or(0);
                let n = dim.unwrap_or(0);
                let row = word
                    .chars()
                    .map(|c| c.to_digit(10).filter(|&x| x < q).map(FieldElement))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| err(lineno, format!("bad entry in row `{word}`")))?;
                if row.len() != n {
                    return Err(err(lineno, format!("row has {} entries, expected {n}", row.len())));
                }
                rows.push(row);
            }
        }
    }
    flush(&mut pending, dim, &mut matrices, source, 0)?;
    let field = field.ok_or_else(|| err(0, "missing `field` line".into()))?;
    let dim = dim.ok_or_else(|| err(0, "missing `dim` line".into()))?;
    for (i, m) in matrices.iter().enumerate() {
        if !m.is_invertible(&field) {
            return Err(err(0, format!("matrix {i} is singular")));
        }
    }
    Ok(MatrixGroupFile {
        field,
        dim,
        label,
        expected_order,
        matrices,
        notes,
    })
}

pub fn load_matrix_group(name: &str, data: &DataSource) -> Result<MatrixGroupFile> {
    parse_matrix_group(&data.read(name)?, name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::transitivity_degree;

    #[test]
    fn bundled_groups_have_declared_orders() {
        let expect = [
            (Sporadic::M11Degree11, 11, 7920u128),
            (Sporadic::M11Degree12, 12, 7920),
            (Sporadic::Psl27Degree8, 8, 168),
            (Sporadic::HigmanSims, 176, 44_352_000),
        ];
        for (which, degree, order) in expect {
            let f = load_sporadic(which, &DataSource::Embedded).unwrap();
            assert_eq!(f.group.degree(), degree);
            assert_eq!(f.group.order(), order);
        }
        let m12 = load_sporadic(Sporadic::M11Degree12, &DataSource::Embedded).unwrap();
        assert_eq!(transitivity_degree(&m12.group, 4), 3);
    }

    #[test]
    fn alt7_matrices() {
        let f = load_matrix_group("alt7_gl42.mat", &DataSource::Embedded).unwrap();
        assert_eq!((f.dim, f.matrices.len()), (4, 2));
        let g = f.action(LinearDomain::ProjectivePoints).unwrap();
        assert_eq!(g.order(), 2520);
        assert_eq!(transitivity_degree(&g, 3), 2);
    }

    #[test]
    fn matrix_parse_errors_carry_lines() {
        let bad = "field 2 1\ndim 2\nmatrix\n10\n0\n";
        match parse_matrix_group(bad, "t.mat") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
        let singular = "field 2 1\ndim 2\nmatrix\n11\n11\n";
        assert!(parse_matrix_group(singular, "s.mat").is_err());
        let wrong_order = "field 2 1\ndim 2\nexpect-order 5\nmatrix\n11\n01\n";
        let f = parse_matrix_group(wrong_order, "w.mat").unwrap();
        assert!(matches!(
            f.action(LinearDomain::Vectors),
            Err(Error::OrderMismatch { .. })
        ));
    }
}
