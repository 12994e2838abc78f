//! Desk-scale instances of every table line, plus negative and trivial fixtures.

use std::fmt;
use std::sync::Arc;

use super::regn::{regn_alt7_input, regn_gammal116_input};
use super::sporadic::{load_sporadic, Sporadic};
use super::*;
use crate::algebra::FormType;
use crate::data::DataSource;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Table1,
    Table2,
    /// Non-trivial 2-designs that are not pairwise transitive under the given group.
    Negative,
    /// Trivial designs, outside the scope of the fast conditions.
    Trivial,
}

/// What a row must reproduce. λ and μ are compared after recomputation from the design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub v: usize,
    pub b: Option<usize>,
    pub k: usize,
    pub lambda: usize,
    pub mu: Option<usize>,
    pub verdict: bool,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2-({},{},{})", self.v, self.k, self.lambda)?;
        if let Some(mu) = self.mu {
            write!(f, " mu={mu}")?;
        }
        write!(f, " verdict={}", self.verdict)
    }
}

/// A built row. The group is absent only when its data file is missing.
#[derive(Clone, Debug)]
pub struct BuiltRow {
    pub design: crate::design::Design,
    pub group: Option<crate::permgroup::GeneratedGroup>,
    pub translations: Option<crate::permgroup::GeneratedGroup>,
}

impl From<Construction> for BuiltRow {
    fn from(c: Construction) -> Self {
        BuiltRow {
            design: c.design,
            group: Some(c.group),
            translations: c.translations,
        }
    }
}

type Builder = Arc<dyn Fn(&DataSource) -> Result<BuiltRow> + Send + Sync>;

#[derive(Clone)]
pub struct CatalogRow {
    pub tag: String,
    pub kind: RowKind,
    pub expected: Expectation,
    builder: Builder,
}

impl fmt::Debug for CatalogRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogRow")
            .field("tag", &self.tag)
            .field("kind", &self.kind)
            .field("expected", &self.expected)
            .finish()
    }
}

impl CatalogRow {
    pub fn build(&self, data: &DataSource) -> Result<BuiltRow> {
        (self.builder)(data)
    }

    /// The table line, for rows of the two tables.
    pub fn table_row(&self) -> Option<TableRow> {
        let table = match self.kind {
            RowKind::Table1 => 1,
            RowKind::Table2 => 2,
            _ => return None,
        };
        let rest = self.tag.split_once(":line")?.1;
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        Some(TableRow {
            table,
            line: digits.parse().ok()?,
        })
    }
}

fn exp(v: usize, k: usize, lambda: usize) -> Expectation {
    Expectation {
        v,
        b: None,
        k,
        lambda,
        mu: None,
        verdict: true,
    }
}

impl Expectation {
    fn blocks(mut self, b: usize) -> Self {
        self.b = Some(b);
        self
    }

    fn mu(mut self, mu: usize) -> Self {
        self.mu = Some(mu);
        self
    }

    fn failing(mut self) -> Self {
        self.verdict = false;
        self
    }
}

struct Rows(Vec<CatalogRow>);

impl Rows {
    fn add<F>(&mut self, tag: impl Into<String>, kind: RowKind, expected: Expectation, build: F)
    where
        F: Fn(&DataSource) -> Result<BuiltRow> + Send + Sync + 'static,
    {
        self.0.push(CatalogRow {
            tag: tag.into(),
            kind,
            expected,
            builder: Arc::new(build),
        });
    }
}

fn complement(c: Construction) -> Result<BuiltRow> {
    Ok(c.complement()?.into())
}

fn binomial(n: usize, k: usize) -> usize {
    crate::util::binomial(n as u64, k as u64) as usize
}

/// Every row, in a fixed order.
pub fn catalog() -> Vec<CatalogRow> {
    use RowKind::*;
    let mut rows = Rows(Vec::new());

    // Table 1
    for v in [5usize, 8] {
        rows.add(format!("Table1:line1({v})"), Table1, exp(v, v - 1, v - 2), move |_| {
            Ok(complete_with_symmetric(v, v - 1)?.into())
        });
    }
    rows.add("Table1:line1(7,PSL(3,2))", Table1, exp(7, 6, 5), |_| {
        let g = pg_design(3, 2, PgKind::Hyperplanes, GroupLevel::Special)?.group;
        Ok(Construction::new(complete_design(7, 6)?, g).into())
    });
    let pg = [(3usize, 2u32, GroupLevel::Special), (3, 3, GroupLevel::Special), (4, 2, GroupLevel::Special), (3, 4, GroupLevel::Semilinear)];
    for &(d, q, level) in &pg {
        let (v, k, l) = (gauss(q, d), gauss(q, d - 1), gauss(q, d - 2));
        rows.add(format!("Table1:line2({d},{q})"), Table1, exp(v, k, l), move |_| {
            Ok(pg_design(d, q, PgKind::Hyperplanes, level)?.into())
        });
    }
    rows.add("Table1:line3", Table1, exp(15, 7, 3), |_| Ok(alt7_coset_pg32()?.construction.into()));
    rows.add("Table1:line3(matrix)", Table1, exp(15, 7, 3), |data| Ok(alt7_matrix_pg32(data)?.into()));
    for &(d, q, level) in &pg {
        let qq = q as usize;
        let (v, k, l) = (gauss(q, d), qq.pow(d as u32 - 1), qq.pow(d as u32 - 2) * (qq - 1));
        rows.add(format!("Table1:line4({d},{q})"), Table1, exp(v, k, l), move |_| {
            complement(pg_design(d, q, PgKind::Hyperplanes, level)?)
        });
    }
    rows.add("Table1:line5", Table1, exp(15, 8, 4), |_| complement(alt7_coset_pg32()?.construction));
    rows.add("Table1:line6", Table1, exp(11, 5, 2), |data| Ok(h11(data)?.into()));
    rows.add("Table1:line7", Table1, exp(11, 6, 3), |data| complement(h11(data)?));
    rows.add("Table1:line8", Table1, exp(176, 50, 14), |data| {
        let d = d176(data)?;
        Ok(BuiltRow {
            design: d.design,
            group: d.group,
            translations: None,
        })
    });
    rows.add("Table1:line9", Table1, exp(176, 126, 90), |data| {
        let d = d176(data)?;
        Ok(BuiltRow {
            design: d.design.complement()?,
            group: d.group,
            translations: None,
        })
    });
    let variants = [
        (2usize, SpVariant::Full, "Sp(4,2)"),
        (2, SpVariant::Derived, "Sp(4,2)'"),
        (2, SpVariant::Subfield(2), "Sp(2,4)"),
        (3, SpVariant::Full, "Sp(6,2)"),
        (3, SpVariant::Subfield(3), "Sp(2,8)"),
    ];
    for (line, sign) in [(10u8, FormsSign::Minus), (12, FormsSign::Plus)] {
        for &(m, variant, name) in &variants {
            let n = 1usize << (2 * m);
            let half = 1usize << (m - 1);
            let (k, l) = match sign {
                FormsSign::Minus => (n / 2 - half, n / 4 - half),
                FormsSign::Plus => (n / 2 + half, n / 4 + half),
            };
            rows.add(format!("Table1:line{line}({m},{name})"), Table1, exp(n, k, l), move |_| {
                Ok(quadratic_forms_design(m, sign, variant)?.into())
            });
        }
    }

    // Table 2
    for (f, q, level) in [(3usize, 2u32, GroupLevel::Special), (2, 3, GroupLevel::Special), (3, 3, GroupLevel::Special), (2, 4, GroupLevel::Semilinear)] {
        let qq = q as usize;
        let e = exp(qq.pow(f as u32), qq.pow(f as u32 - 1), gauss(q, f - 1)).mu(qq.pow(f as u32 - 2));
        rows.add(format!("Table2:line1({f},{q})"), Table2, e, move |_| Ok(ag_design(f, q, level)?.into()));
    }
    rows.add("Table2:line2", Table2, exp(16, 8, 7).mu(4).blocks(30), |data| {
        Ok(construction_regn(&regn_alt7_input(data)?)?.into())
    });
    rows.add("Table2:line3", Table2, exp(16, 4, 1).mu(1).blocks(20), |_| {
        Ok(construction_regn(&regn_gammal116_input()?)?.into())
    });
    rows.add("Table2:line4", Table2, exp(8, 4, 3).mu(2).blocks(14), |data| {
        let design = ag_design(3, 2, GroupLevel::Special)?.design;
        let group = load_sporadic(Sporadic::Psl27Degree8, data)?.group;
        Ok(Construction::new(design, group).into())
    });
    rows.add("Table2:line5", Table2, exp(12, 6, 5).mu(3).blocks(22), |data| Ok(h12(data)?.into()));
    for (d, q, b) in [(4usize, 2u32, 35usize), (4, 3, 130)] {
        rows.add(format!("Table2:line6({d},{q})"), Table2, exp(gauss(q, d), q as usize + 1, 1).mu(1).blocks(b), move |_| {
            Ok(pg_design(d, q, PgKind::Lines, GroupLevel::Special)?.into())
        });
    }
    rows.add("Table2:line7", Table2, exp(21, 6, 4).mu(2).blocks(56), |_| Ok(hyperoval_design(true)?.into()));
    rows.add("Table2:line7(PSL(3,4))", Table2, exp(21, 6, 4).mu(2).blocks(56), |_| Ok(hyperoval_design(false)?.into()));
    rows.add("Table2:line8", Table2, exp(22, 6, 5).mu(2).blocks(77), |data| Ok(m22_design(data)?.into()));

    // negative fixtures
    for v in 5..=8usize {
        for k in 3..v - 1 {
            let e = exp(v, k, binomial(v - 2, k - 2)).blocks(binomial(v, k)).failing();
            rows.add(format!("neg:C({v},{k})"), Negative, e, move |_| Ok(complete_with_symmetric(v, k)?.into()));
        }
    }
    for (kind, v, k, l) in [(FormType::Elliptic, 28usize, 12usize, 11usize), (FormType::Hyperbolic, 36, 16, 12)] {
        rows.add(format!("neg:Sp(6,2)-{v}"), Negative, exp(v, k, l).blocks(63).failing(), move |_| {
            Ok(sp62_negative_fixture(kind)?.construction.into())
        });
    }

    // trivial fixtures
    rows.add("trivial:C(6,2)", Trivial, exp(6, 2, 1).blocks(15), |_| Ok(complete_with_symmetric(6, 2)?.into()));
    rows.add("trivial:C(5,5)", Trivial, exp(5, 5, 1).blocks(1), |_| Ok(complete_with_symmetric(5, 5)?.into()));
    rows.0
}

fn gauss(q: u32, d: usize) -> usize {
    let q = q as usize;
    (q.pow(d as u32) - 1) / (q - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_are_unique_and_parse() {
        let rows = catalog();
        let mut tags: Vec<&str> = rows.iter().map(|r| r.tag.as_str()).collect();
        tags.sort_unstable();
        let n = tags.len();
        tags.dedup();
        assert_eq!(tags.len(), n);
        let r = rows.iter().find(|r| r.tag == "Table2:line6(4,2)").unwrap();
        assert_eq!(r.table_row(), Some(TableRow { table: 2, line: 6 }));
        assert!(rows.iter().any(|r| r.tag == "neg:C(7,4)"));
        assert!(rows.iter().any(|r| r.tag == "Table2:line1(3,3)"));
    }

    #[test]
    fn table_rows_match_their_families() {
        for row in catalog() {
            if let Some(t) = row.table_row() {
                let e = &row.expected;
                assert!(rows_matching(e.v, e.k, e.lambda).contains(&t), "{}", row.tag);
            }
        }
    }

    #[test]
    fn small_rows_build_with_expected_parameters() {
        let data = DataSource::Embedded;
        for row in catalog().into_iter().filter(|r| r.expected.v <= 22) {
            let built = row.build(&data).unwrap();
            let p = built.design.parameters();
            let e = &row.expected;
            assert_eq!((p.v, p.k, p.lambda), (e.v, Some(e.k), Some(e.lambda)), "{}", row.tag);
            if let Some(b) = e.b {
                assert_eq!(p.b, b, "{}", row.tag);
            }
            if e.mu.is_some() {
                assert_eq!(p.mu, e.mu, "{}", row.tag);
            }
            assert!(built.design.is_preserved_by(built.group.as_ref().unwrap()), "{}", row.tag);
        }
    }
}
