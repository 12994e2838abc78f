//! Parametric families of the two classification tables.

use std::fmt;

use crate::algebra::field::prime_power;

/// A line of one of the two tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableRow {
    /// 1 for symmetric designs, 2 for quasisymmetric ones.
    pub table: u8,
    pub line: u8,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Table{}:line{}", self.table, self.line)
    }
}

fn prime_powers_up_to(n: u64) -> impl Iterator<Item = u64> {
    (2..=n).filter(|&q| prime_power(q).is_some())
}

/// `(q^d - 1)/(q - 1)` and friends for every prime power `q` and `d >= 2` with the
/// first entry at most `v`.
fn projective_sizes(v: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for q in prime_powers_up_to(v) {
        let mut d = 2;
        while (q.pow(d) - 1) / (q - 1) <= v {
            out.push((q, d));
            d += 1;
        }
    }
    out
}

fn gauss(q: u64, d: u32) -> u64 {
    (q.pow(d) - 1) / (q - 1)
}

/// Table lines whose parameter family contains `2-(v, k, λ)`.
pub fn rows_matching(v: usize, k: usize, lambda: usize) -> Vec<TableRow> {
    let (v, k, lambda) = (v as u64, k as u64, lambda as u64);
    let mut out = Vec::new();
    let mut push = |table: u8, line: u8| {
        let row = TableRow { table, line };
        if !out.contains(&row) {
            out.push(row);
        }
    };
    type Entry = ((u64, u64, u64), (u8, u8));
    let sporadic: [Entry; 11] = [
        ((15, 7, 3), (1, 3)),
        ((15, 8, 4), (1, 5)),
        ((11, 5, 2), (1, 6)),
        ((11, 6, 3), (1, 7)),
        ((176, 50, 14), (1, 8)),
        ((176, 126, 90), (1, 9)),
        ((16, 8, 7), (2, 2)),
        ((16, 4, 1), (2, 3)),
        ((8, 4, 3), (2, 4)),
        ((12, 6, 5), (2, 5)),
        ((21, 6, 4), (2, 7)),
    ];
    if v >= 4 && k == v - 1 && lambda == v - 2 {
        push(1, 1);
    }
    for &(q, d) in &projective_sizes(v) {
        if gauss(q, d) != v {
            continue;
        }
        if d > 2 && k == gauss(q, d - 1) && lambda == gauss(q, d - 2) {
            push(1, 2);
        }
        if d > 2 && k == q.pow(d - 1) && lambda == q.pow(d - 2) * (q - 1) {
            push(1, 4);
        }
        if d >= 4 && k == q + 1 && lambda == 1 {
            push(2, 6);
        }
    }
    for ((sv, sk, sl), (table, line)) in sporadic {
        if (v, k, lambda) == (sv, sk, sl) {
            push(table, line);
        }
    }
    for m in 2..32u32 {
        if 1u64 << (2 * m) > v {
            break;
        }
        if v == 1 << (2 * m) {
            let minus = ((1u64 << (2 * m - 1)) - (1 << (m - 1)), (1u64 << (2 * m - 2)) - (1 << (m - 1)));
            let plus = ((1u64 << (2 * m - 1)) + (1 << (m - 1)), (1u64 << (2 * m - 2)) + (1 << (m - 1)));
            if (k, lambda) == minus {
                push(1, 10);
                if m % 3 == 0 {
                    push(1, 11);
                }
            }
            if (k, lambda) == plus {
                push(1, 12);
                if m % 3 == 0 {
                    push(1, 13);
                }
            }
        }
    }
    for q in prime_powers_up_to(v) {
        let mut f = 2;
        while q.pow(f) <= v {
            if q.pow(f) == v && k == q.pow(f - 1) && lambda == gauss(q, f - 1) && k > 2 {
                push(2, 1);
            }
            f += 1;
        }
    }
    if (v, k, lambda) == (22, 6, 5) {
        push(2, 8);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: usize, k: usize, l: usize) -> Vec<String> {
        rows_matching(v, k, l).iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn families() {
        assert_eq!(rows(15, 7, 3), ["Table1:line2", "Table1:line3"]);
        assert_eq!(rows(15, 8, 4), ["Table1:line4", "Table1:line5"]);
        assert_eq!(rows(16, 6, 2), ["Table1:line10"]);
        assert_eq!(rows(64, 36, 20), ["Table1:line12", "Table1:line13"]);
        assert_eq!(rows(16, 4, 1), ["Table2:line1", "Table2:line3"]);
        assert_eq!(rows(15, 3, 1), ["Table2:line6"]);
        assert_eq!(rows(7, 3, 1), ["Table1:line2"]);
        assert_eq!(rows(6, 5, 4), ["Table1:line1"]);
        assert!(rows(6, 3, 2).is_empty());
        assert!(rows(11, 5, 6).is_empty());
    }
}
