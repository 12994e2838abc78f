//! Line-oriented `key: value` certificates.

use std::fmt;
use std::time::Duration;

use super::{BlockActionReport, DesignShape, ImprimitiveCase, PairSet, PairwiseReport};
use crate::design::{Design, DesignParameters};
use crate::error::{Error, Result};
use crate::permgroup::GeneratedGroup;

/// Key under which the wall-clock time is recorded.
pub const ELAPSED_KEY: &str = "elapsed_ms";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    entries: Vec<(String, String)>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn join(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}

impl Certificate {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    /// The text without the timing line, for byte comparison between runs.
    pub fn body(&self) -> String {
        self.entries
            .iter()
            .filter(|(k, _)| k != ELAPSED_KEY)
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect()
    }

    pub fn parameters(&mut self, params: &DesignParameters) {
        self.push("v", params.v);
        self.push("b", params.b);
        self.push("k", opt(params.k));
        self.push("r", opt(params.r));
        self.push("lambda", opt(params.lambda));
        self.push("t_max", params.t_max);
        self.push("intersection_numbers", join(&params.intersection_numbers()));
        self.push("mu", opt(params.mu));
        self.push("symmetric", yes_no(params.is_symmetric()));
        self.push("quasisymmetric", yes_no(params.is_quasisymmetric()));
        self.push("trivial", yes_no(params.is_trivial()));
    }

    pub fn pairwise(&mut self, report: &PairwiseReport) {
        self.push("method", report.method);
        for (i, set) in PairSet::ALL.iter().enumerate() {
            let value = match report.orbit_counts {
                Some(c) => c[i].to_string(),
                None if !report.nonempty[i] => "0".to_string(),
                None => "not counted".to_string(),
            };
            self.push(format!("orbits.{}", set.key()), value);
        }
        if let Some(fast) = &report.fast {
            self.push("fast.points_two_transitive", yes_no(fast.points_two_transitive));
            self.push("fast.block_rank", opt(fast.block_rank));
            self.push("fast.disjoint_blocks", yes_no(fast.disjoint_blocks));
            self.push("fast.stabilizer_orbits_on_blocks", fast.stabilizer_orbits_on_blocks);
        }
    }

    pub fn block_action(&mut self, report: &BlockActionReport) {
        self.push("faithful_on_points", yes_no(report.faithful_on_points));
        self.push("faithful_on_blocks", yes_no(report.faithful_on_blocks));
        self.push("rank_on_blocks", report.rank_on_blocks);
        self.push("block_suborbits", join(&report.block_suborbit_sizes));
        self.push("primitive_on_blocks", yes_no(report.primitive_on_blocks));
        if let Some((parts, size)) = report.block_system {
            self.push("block_system", format!("{parts} parts of size {size}"));
        }
        self.push(
            "shape",
            match report.shape {
                DesignShape::Symmetric => "symmetric".to_string(),
                DesignShape::Quasisymmetric(x, y) => format!("quasisymmetric {x},{y}"),
                DesignShape::Other => "other".to_string(),
            },
        );
        if let Some(case) = &report.imprimitive_case {
            self.push(
                "imprimitive_case",
                match case {
                    ImprimitiveCase::NicelyAffine {
                        parallel_classes,
                        mu,
                    } => format!("nicely affine, {parallel_classes} parallel classes, mu {mu}"),
                    ImprimitiveCase::Quasiprimitive => "quasiprimitive".to_string(),
                    ImprimitiveCase::Unclassified => "unclassified".to_string(),
                },
            );
        }
        self.push("block_stabilizer_orbits", join(&report.block_stabilizer_orbits));
        if let Some(na) = &report.nicely_affine {
            self.push("nicely_affine", yes_no(na.holds));
        }
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        let mut cert = Certificate::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (k, v) = line.split_once(": ").ok_or_else(|| Error::Parse {
                source_name: "certificate".into(),
                line: idx + 1,
                message: "expected `key: value`".into(),
            })?;
            cert.push(k, v);
        }
        Ok(cert)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(f, "{k}: {v}")?;
        }
        Ok(())
    }
}

/// Full certificate for one design and group. `λ` is always recomputed from the design.
pub fn certificate(
    design: &Design,
    group: &GeneratedGroup,
    pairwise: &PairwiseReport,
    block_action: Option<&BlockActionReport>,
    elapsed: Duration,
) -> Certificate {
    let mut cert = Certificate::new();
    cert.push("design", design.label());
    cert.push("group", group.label());
    cert.push("group_order", group.order());
    cert.parameters(&design.parameters());
    cert.pairwise(pairwise);
    if let Some(report) = block_action {
        cert.block_action(report);
    }
    cert.push("verdict", pairwise.verdict);
    cert.push(ELAPSED_KEY, elapsed.as_millis());
    cert
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    Certificate::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{classify_block_action, verify, Mode};

    #[test]
    fn round_trips_and_excludes_timing_from_body() {
        let lines = (0..7u32).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        let d = Design::new(7, lines, "fano").unwrap();
        let shift = crate::permgroup::Permutation::from_images((0..7).map(|i| (i + 1) % 7).collect())
            .unwrap();
        let g = GeneratedGroup::new(7, vec![shift], "C7").unwrap();
        let report = verify(&d, &g, Mode::Both).unwrap();
        let block = classify_block_action(&d, &g, None).unwrap();
        let cert = certificate(&d, &g, &report, Some(&block), Duration::from_millis(12));
        let text = cert.to_string();
        assert!(text.contains("verdict: false"));
        assert!(text.contains("lambda: 1"));
        assert!(!cert.body().contains(ELAPSED_KEY));
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.get("orbits.flags"), Some("3"));
    }
}
