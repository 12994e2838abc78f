//! The `.dsg` text format.
//!
//! ```text
//! # Fano plane
//! points 7
//! label PG(2,2)
//! expect k 3
//! expect lambda 1
//! block 0 1 3
//! block 1 2 4
//! ```
//!
//! Block entries are 0-based and strictly ascending.

use std::fmt::Write as _;
use std::path::Path;

use super::Design;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct DesignFile {
    pub design: Design,
    pub expected_k: Option<usize>,
    pub expected_lambda: Option<usize>,
    pub notes: Vec<String>,
}

fn parse_err(source: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        source_name: source.to_string(),
        line,
        message: message.into(),
    }
}

fn number(source: &str, line: usize, token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(source, line, format!("expected a non-negative integer, found `{token}`")))
}

pub fn parse_design(text: &str, source: &str) -> Result<DesignFile> {
    let mut v: Option<usize> = None;
    let mut label = String::from("D");
    let mut expected_k = None;
    let mut expected_lambda = None;
    let mut blocks = Vec::new();
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
            "points" => v = Some(number(source, lineno, rest)?),
            "label" => label = rest.to_string(),
            "expect" => {
                let (what, value) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| parse_err(source, lineno, "`expect` needs a name and a value"))?;
                let value = number(source, lineno, value.trim())?;
                match what {
                    "k" => expected_k = Some(value),
                    "lambda" => expected_lambda = Some(value),
                    other => {
                        return Err(parse_err(
                            source,
                            lineno,
                            format!("unknown expectation `{other}`"),
                        ))
                    }
                }
            }
            "block" => {
                let n = v.ok_or_else(|| parse_err(source, lineno, "`block` before `points`"))?;
                let block = rest
                    .split_whitespace()
                    .map(|t| number(source, lineno, t))
                    .collect::<Result<Vec<_>>>()?;
                if block.is_empty() {
                    return Err(parse_err(source, lineno, "empty block"));
                }
                if let Some(&p) = block.iter().find(|&&p| p >= n) {
                    return Err(parse_err(
                        source,
                        lineno,
                        format!("point {p} out of range for {n} points"),
                    ));
                }
                if block.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(parse_err(source, lineno, "block entries must be strictly ascending"));
                }
                blocks.push(block.into_iter().map(|p| p as u32).collect());
            }
            other => {
                return Err(parse_err(source, lineno, format!("unknown keyword `{other}`")))
            }
        }
    }
    let v = v.ok_or_else(|| parse_err(source, 0, "missing `points` line"))?;
    if blocks.is_empty() {
        return Err(parse_err(source, 0, "no blocks"));
    }
    let design = Design::new(v, blocks, label.clone())?;
    if expected_k.is_some() || expected_lambda.is_some() {
        let params = design.parameters();
        let show = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |x| x.to_string());
        if let Some(k) = expected_k {
            if params.k != Some(k) {
                return Err(Error::ExpectationMismatch {
                    label: format!("{label}: k"),
                    expected: k.to_string(),
                    found: show(params.k),
                });
            }
        }
        if let Some(lambda) = expected_lambda {
            if params.lambda != Some(lambda) {
                return Err(Error::ExpectationMismatch {
                    label: format!("{label}: lambda"),
                    expected: lambda.to_string(),
                    found: show(params.lambda),
                });
            }
        }
    }
    Ok(DesignFile {
        design,
        expected_k,
        expected_lambda,
        notes,
    })
}

pub fn read_design(path: &Path) -> Result<DesignFile> {
    let text = std::fs::read_to_string(path)?;
    parse_design(&text, &path.display().to_string())
}

/// Serialises with `expect` lines for whatever parameters the design has.
pub fn write_design(design: &Design) -> String {
    let params = design.parameters();
    let mut out = String::new();
    writeln!(out, "points {}", design.v()).unwrap();
    writeln!(out, "label {}", design.label()).unwrap();
    if let Some(k) = params.k {
        writeln!(out, "expect k {k}").unwrap();
    }
    if let Some(lambda) = params.lambda {
        writeln!(out, "expect lambda {lambda}").unwrap();
    }
    for block in design.blocks() {
        let pts: Vec<String> = block.iter().map(|p| p.to_string()).collect();
        writeln!(out, "block {}", pts.join(" ")).unwrap();
    }
    out
}
