//! The regression over every catalog row.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::constructions::{catalog, CatalogRow, Expectation, RowKind};
use crate::data::DataSource;
use crate::design::DesignParameters;
use crate::verify::{certificate, classify_block_action, verify, BlockActionReport, Certificate, Mode, PairwiseReport};

/// Default bound on the number of points of a certified row.
pub const DEFAULT_MAX_POINTS: usize = 200;

pub const CONSTRUCTION_ONLY: &str = "construction-only: parameters verified, group check skipped";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    /// Parameters match but the group could not be loaded.
    ConstructionOnly,
    /// More points than the bound.
    Skipped,
    Fail(String),
}

impl RowStatus {
    pub fn is_failure(&self) -> bool {
        matches!(self, RowStatus::Fail(_))
    }
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowStatus::Pass => write!(f, "pass"),
            RowStatus::ConstructionOnly => write!(f, "{CONSTRUCTION_ONLY}"),
            RowStatus::Skipped => write!(f, "skipped: above the point bound"),
            RowStatus::Fail(why) => write!(f, "FAIL: {why}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RowCertificate {
    pub tag: String,
    pub kind: RowKind,
    pub expected: Expectation,
    pub parameters: Option<DesignParameters>,
    pub pairwise: Option<PairwiseReport>,
    pub block_action: Option<BlockActionReport>,
    pub certificate: Certificate,
    pub status: RowStatus,
    pub elapsed: Duration,
}

/// One certificate per catalog row, in catalog order.
#[derive(Clone, Debug)]
pub struct CertificateBundle {
    pub max_points: usize,
    pub rows: Vec<RowCertificate>,
}

impl CertificateBundle {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| !r.status.is_failure())
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowCertificate> {
        self.rows.iter().filter(|r| r.status.is_failure())
    }

    pub fn row(&self, tag: &str) -> Option<&RowCertificate> {
        self.rows.iter().find(|r| r.tag == tag)
    }

    /// All certificates without timings.
    pub fn body(&self) -> String {
        self.rows
            .iter()
            .map(|r| format!("== {}\n{}", r.tag, r.certificate.body()))
            .collect()
    }

    pub fn summary(&self) -> String {
        let count = |f: fn(&RowStatus) -> bool| self.rows.iter().filter(|r| f(&r.status)).count();
        format!(
            "rows: {} pass: {} construction-only: {} skipped: {} fail: {}",
            self.rows.len(),
            count(|s| *s == RowStatus::Pass),
            count(|s| *s == RowStatus::ConstructionOnly),
            count(|s| *s == RowStatus::Skipped),
            count(RowStatus::is_failure),
        )
    }
}

impl fmt::Display for CertificateBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "== {}", r.tag)?;
            write!(f, "{}", r.certificate)?;
        }
        writeln!(f, "{}", self.summary())
    }
}

fn mismatches(expected: &Expectation, found: &DesignParameters) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |name: &str, want: Option<usize>, got: Option<usize>| {
        if want.is_some() && want != got {
            out.push(format!("{name} expected {}, found {}", want.unwrap_or(0), got.map_or("none".into(), |g| g.to_string())));
        }
    };
    check("v", Some(expected.v), Some(found.v));
    check("b", expected.b, Some(found.b));
    check("k", Some(expected.k), found.k);
    check("lambda", Some(expected.lambda), found.lambda);
    check("mu", expected.mu, found.mu);
    out
}

fn skeleton(row: &CatalogRow) -> Certificate {
    let mut cert = Certificate::new();
    cert.push("tag", &row.tag);
    cert.push("expected", &row.expected);
    cert
}

/// Builds and verifies one row with both methods.
pub fn certify_row(row: &CatalogRow, data: &DataSource) -> RowCertificate {
    let start = Instant::now();
    let mut out = RowCertificate {
        tag: row.tag.clone(),
        kind: row.kind,
        expected: row.expected.clone(),
        parameters: None,
        pairwise: None,
        block_action: None,
        certificate: skeleton(row),
        status: RowStatus::Pass,
        elapsed: Duration::ZERO,
    };
    let finish = |mut out: RowCertificate, status: RowStatus| {
        out.elapsed = start.elapsed();
        out.certificate.push("status", &status);
        out.status = status;
        out
    };
    let built = match row.build(data) {
        Ok(b) => b,
        Err(e) => return finish(out, RowStatus::Fail(format!("construction failed: {e}"))),
    };
    let params = built.design.parameters();
    let wrong = mismatches(&row.expected, &params);
    out.parameters = Some(params.clone());
    let Some(group) = built.group else {
        out.certificate.push("design", built.design.label());
        out.certificate.parameters(&params);
        out.certificate.push("group", "unavailable");
        let status = if wrong.is_empty() {
            RowStatus::ConstructionOnly
        } else {
            RowStatus::Fail(wrong.join("; "))
        };
        return finish(out, status);
    };
    let report = match verify(&built.design, &group, Mode::Both) {
        Ok(r) => r,
        Err(e) => return finish(out, RowStatus::Fail(format!("verification failed: {e}"))),
    };
    let block = classify_block_action(&built.design, &group, built.translations.as_ref()).ok();
    let cert = certificate(&built.design, &group, &report, block.as_ref(), start.elapsed());
    let mut merged = skeleton(row);
    for (k, v) in cert.entries() {
        merged.push(k.clone(), v);
    }
    out.certificate = merged;
    let mut problems = wrong;
    if report.verdict != row.expected.verdict {
        problems.push(format!("verdict expected {}, found {}", row.expected.verdict, report.verdict));
    }
    out.pairwise = Some(report);
    out.block_action = block;
    let status = if problems.is_empty() {
        RowStatus::Pass
    } else {
        RowStatus::Fail(problems.join("; "))
    };
    finish(out, status)
}

/// Certifies every catalog row with at most `max_points` points. Larger rows are listed
/// as skipped so that the bundle still covers the whole catalog.
pub fn certify_all(max_points: usize, data: &DataSource) -> CertificateBundle {
    let rows: Vec<RowCertificate> = catalog()
        .par_iter()
        .map(|row| {
            if row.expected.v > max_points {
                let mut cert = skeleton(row);
                cert.push("status", RowStatus::Skipped);
                RowCertificate {
                    tag: row.tag.clone(),
                    kind: row.kind,
                    expected: row.expected.clone(),
                    parameters: None,
                    pairwise: None,
                    block_action: None,
                    certificate: cert,
                    status: RowStatus::Skipped,
                    elapsed: Duration::ZERO,
                }
            } else {
                certify_row(row, data)
            }
        })
        .collect();
    CertificateBundle { max_points, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows_pass_and_large_rows_are_skipped() {
        let bundle = certify_all(20, &DataSource::Embedded);
        assert!(bundle.passed(), "{}", bundle);
        assert_eq!(bundle.rows.len(), catalog().len());
        assert_eq!(bundle.row("Table1:line8").unwrap().status, RowStatus::Skipped);
        assert_eq!(bundle.row("Table1:line2(3,2)").unwrap().status, RowStatus::Pass);
        let neg = bundle.row("neg:C(6,3)").unwrap();
        assert_eq!(neg.status, RowStatus::Pass);
        assert_eq!(neg.certificate.get("verdict"), Some("false"));
    }

    #[test]
    fn bodies_are_deterministic() {
        let a = certify_all(16, &DataSource::Embedded);
        let b = certify_all(16, &DataSource::Embedded);
        assert_eq!(a.body(), b.body());
    }

    #[test]
    fn missing_group_data_gives_construction_only() {
        let tmp = tempfile::tempdir().unwrap();
        let dir = tmp.path().to_path_buf();
        for name in DataSource::names().filter(|n| *n != "hs_176.grp") {
            std::fs::write(dir.join(name), DataSource::Embedded.read(name).unwrap()).unwrap();
        }
        let data = DataSource::Dir(dir);
        let row = catalog().into_iter().find(|r| r.tag == "Table1:line8").unwrap();
        let cert = certify_row(&row, &data);
        assert_eq!(cert.status, RowStatus::ConstructionOnly);
        assert_eq!(cert.certificate.get("status"), Some(CONSTRUCTION_ONLY));
        assert_eq!(cert.certificate.get("lambda"), Some("14"));
    }

    #[test]
    fn mismatch_is_reported() {
        let e = Expectation { v: 7, b: Some(7), k: 3, lambda: 2, mu: None, verdict: true };
        let d = crate::constructions::pg_design(3, 2, crate::constructions::PgKind::Hyperplanes, Default::default())
            .unwrap()
            .design
            .parameters();
        assert_eq!(mismatches(&e, &d), vec!["lambda expected 2, found 1".to_string()]);
    }
}
