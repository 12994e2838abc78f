//! The `.grp` text format.
//!
//! ```text
//! # comment
//! degree 4
//! label Sym(4)
//! expect-order 24
//! perm 1 0 2 3
//! perm 1 2 3 0
//! ```
//!
//! `expect-order` and `expect-transitivity` are checked at load.

use std::fmt::Write as _;
use std::path::Path;

use super::action::transitivity_degree;
use super::group::GeneratedGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A parsed group file, after validation.
#[derive(Clone, Debug)]
pub struct GroupFile {
    pub group: GeneratedGroup,
    pub expected_order: Option<u128>,
    pub expected_transitivity: Option<usize>,
    /// Leading `#` lines, without the marker.
    pub notes: Vec<String>,
}

fn parse_err(source: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        source_name: source.to_string(),
        line,
        message: message.into(),
    }
}

pub fn parse_group(text: &str, source: &str) -> Result<GroupFile> {
    let mut degree: Option<usize> = None;
    let mut label = String::from("G");
    let mut expected_order = None;
    let mut expected_transitivity = None;
    let mut gens = Vec::new();
    let mut notes = Vec::new();
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
            "degree" => {
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| parse_err(source, lineno, format!("bad degree `{rest}`")))?;
                degree = Some(n);
            }
            "label" => label = rest.to_string(),
            "expect-order" => {
                expected_order = Some(rest.parse::<u128>().map_err(|_| {
                    parse_err(source, lineno, format!("bad expected order `{rest}`"))
                })?)
            }
            "expect-transitivity" => {
                expected_transitivity = Some(rest.parse::<usize>().map_err(|_| {
                    parse_err(source, lineno, format!("bad transitivity `{rest}`"))
                })?)
            }
            "perm" => {
                let n = degree
                    .ok_or_else(|| parse_err(source, lineno, "`perm` before `degree`"))?;
                let images = rest
                    .split_whitespace()
                    .map(|t| t.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| parse_err(source, lineno, "non-integer image"))?;
                if images.len() != n {
                    return Err(parse_err(
                        source,
                        lineno,
                        format!("expected {n} images, found {}", images.len()),
                    ));
                }
                let p = Permutation::from_images(images)
                    .map_err(|e| parse_err(source, lineno, e.to_string()))?;
                gens.push(p);
            }
            other => {
                return Err(parse_err(source, lineno, format!("unknown keyword `{other}`")))
            }
        }
    }
    let degree = degree.ok_or_else(|| parse_err(source, 0, "missing `degree` line"))?;
    let group = GeneratedGroup::new(degree, gens, label.clone())?;
    if let Some(expected) = expected_order {
        let found = group.order();
        if found != expected {
            return Err(Error::OrderMismatch {
                label,
                expected,
                found,
            });
        }
    }
    if let Some(expected) = expected_transitivity {
        let found = transitivity_degree(&group, expected + 1);
        if found != expected {
            return Err(Error::TransitivityMismatch {
                label,
                expected,
                found,
            });
        }
    }
    Ok(GroupFile {
        group,
        expected_order,
        expected_transitivity,
        notes,
    })
}

pub fn read_group(path: &Path) -> Result<GroupFile> {
    let text = std::fs::read_to_string(path)?;
    parse_group(&text, &path.display().to_string())
}

/// Serialises with an `expect-order` line so the file is self-checking.
pub fn write_group(group: &GeneratedGroup) -> String {
    let mut out = String::new();
    writeln!(out, "degree {}", group.degree()).unwrap();
    writeln!(out, "label {}", group.label()).unwrap();
    writeln!(out, "expect-order {}", group.order()).unwrap();
    for g in group.generators() {
        let imgs: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
        writeln!(out, "perm {}", imgs.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s5 = GeneratedGroup::symmetric(5);
        let text = write_group(&s5);
        let back = parse_group(&text, "mem").unwrap();
        assert_eq!(back.group.order(), 120);
        assert_eq!(back.group.label(), "Sym(5)");
        assert_eq!(back.expected_order, Some(120));
    }

    #[test]
    fn order_mismatch_is_fatal() {
        let text = "degree 3\nexpect-order 5\nperm 1 2 0\n";
        assert!(matches!(
            parse_group(text, "mem"),
            Err(Error::OrderMismatch { expected: 5, found: 3, .. })
        ));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "# header\ndegree 3\nperm 1 1 0\n";
        match parse_group(text, "bad.grp") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group("perm 0 1\n", "x") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_group("degree 2\nfrobnicate\n", "x").is_err());
    }

    #[test]
    fn transitivity_claim_is_checked() {
        let text = "degree 4\nexpect-transitivity 2\nperm 1 2 3 0\n";
        assert!(matches!(
            parse_group(text, "mem"),
            Err(Error::TransitivityMismatch { found: 1, .. })
        ));
    }
}
